#include "nmz/poly.hpp"

#include <algorithm>
#include <sstream>

#include "nmz/ff.hpp"

namespace nmz {

int Partition::block_of(std::size_t var) const {
  if (var < d1) return 0;
  if (var < d1 + d2) return 1;
  return 2;
}

SparsePoly::SparsePoly(std::size_t n_vars, Partition partition) : n_vars_(n_vars), partition_(partition) {
  if (partition.size() != n_vars)
    throw DomainError("partition sizes sum to " + std::to_string(partition.size()) + " but polynomial has " +
                      std::to_string(n_vars) + " variables");
}

SparsePoly SparsePoly::from_terms(std::size_t n_vars, Partition partition,
                                  const std::vector<std::pair<Exponent, Rat>>& terms) {
  SparsePoly p(n_vars, partition);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

SparsePoly SparsePoly::monomial(std::size_t n_vars, Partition partition, Exponent e, Rat c) {
  SparsePoly p(n_vars, partition);
  p.add_term(e, c);
  return p;
}

void SparsePoly::check_exponent(const Exponent& e) const {
  if (e.size() != n_vars_)
    throw DomainError("exponent " + to_string(e) + " has length " + std::to_string(e.size()) + ", expected " +
                      std::to_string(n_vars_));
  for (auto x : e)
    if (x < 0) throw DomainError("negative exponent in " + to_string(e));
}

bool SparsePoly::has_constant_term() const {
  return terms_.count(Exponent(n_vars_, 0)) != 0;
}

Rat SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rat& c) {
  check_exponent(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::with_partition(Partition p) const {
  SparsePoly r(n_vars_, p);
  r.terms_ = terms_;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.n_vars_ != n_vars_) throw DomainError("adding polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.n_vars_ != n_vars_) throw DomainError("subtracting polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.n_vars_ != b.n_vars_) throw DomainError("multiplying polynomials in different numbers of variables");
  SparsePoly r(a.n_vars_, a.partition_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly r = monomial(n_vars_, partition_, Exponent(n_vars_, 0));
  SparsePoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

IndexSet SparsePoly::variables() const {
  IndexSet vars;
  for (std::size_t i = 0; i < n_vars_; ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        vars.push_back(i);
        break;
      }
    }
  }
  return vars;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lexicographic order reads more naturally (x1^2 before x1*x2).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<Exponent> support(const SparsePoly& p) {
  std::vector<Exponent> s;
  s.reserve(p.size());
  for (const auto& [e, c] : p.terms()) s.push_back(e);
  return s;
}

SparsePoly restrict_terms(const SparsePoly& p, const std::vector<Exponent>& keep) {
  SparsePoly r(p.n_vars(), p.partition());
  for (const auto& e : keep) {
    auto c = p.coefficient(e);
    if (c != 0) r.add_term(e, c);
  }
  return r;
}

BalanceCheck check_balanced(const SparsePoly& p) {
  const auto& part = p.partition();
  for (const auto& [e, c] : p.terms()) {
    std::int64_t plus = 0, minus = 0;
    for (std::size_t i = 0; i < part.d1; ++i) plus += e[i];
    for (std::size_t i = part.d1; i < part.d1 + part.d2; ++i) minus += e[i];
    if (plus != minus) return {false, e};
  }
  return {};
}

SparsePoly extract_h(const SparsePoly& f) {
  const auto& part = f.partition();
  const std::size_t off = part.d1 + part.d2;
  SparsePoly h(part.d3, Partition{0, part.d3, 0});
  for (const auto& [e, c] : f.terms()) {
    bool in_z = std::all_of(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(off), [](auto x) { return x == 0; });
    if (!in_z) continue;
    h.add_term(Exponent(e.begin() + static_cast<std::ptrdiff_t>(off), e.end()), c);
  }
  return h;
}

SparsePoly embed(const SparsePoly& p, std::size_t n_vars, std::size_t offset, Partition partition) {
  if (offset + p.n_vars() > n_vars) throw DomainError("embed: target has too few variables");
  SparsePoly r(n_vars, partition);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(n_vars, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    r.add_term(f, c);
  }
  return r;
}

SparsePoly set_to_zero(const SparsePoly& p, const IndexSet& zero_vars) {
  SparsePoly r(p.n_vars(), p.partition());
  for (const auto& [e, c] : p.terms()) {
    bool vanishes = std::any_of(zero_vars.begin(), zero_vars.end(), [&](auto i) { return e[i] > 0; });
    if (!vanishes) r.add_term(e, c);
  }
  return r;
}

std::int64_t eval_mod_q(const SparsePoly& p, const std::vector<std::int64_t>& point, std::int64_t q) {
  if (!ff::is_prime(q)) throw DomainError("q=" + std::to_string(q) + " is not prime (prime powers unsupported)");
  if (point.size() != p.n_vars()) throw DomainError("evaluation point has wrong length");
  std::int64_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t term = ff::reduce(c, q);
    for (std::size_t i = 0; i < e.size() && term; ++i) term = term * ff::pow(point[i], e[i], q) % q;
    acc = (acc + term) % q;
  }
  return acc;
}

}  // namespace nmz
