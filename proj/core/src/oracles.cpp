#include "nmz/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nmz/ff.hpp"
#include "nmz/linalg.hpp"

namespace nmz {

void Budget::charge(std::uint64_t n, const std::string& what) {
  used_ += n;
  if (used_ > limit_)
    throw BudgetExceeded(what + ": enumeration budget of " + std::to_string(limit_) + " evaluations exceeded");
}

Rat FiberCounts::total() const {
  Rat s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

FiberCounts& FiberCounts::operator+=(const FiberCounts& o) {
  if (q != o.q) throw DomainError("adding fiber counts over different fields");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

FiberCounts& FiberCounts::operator*=(const Rat& c) {
  for (auto& x : counts) x *= c;
  return *this;
}

std::string FiberCounts::str() const {
  std::ostringstream os;
  os << "q=" << q << " [";
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? " " : "") << counts[i].get_str();
  os << ']';
  return os.str();
}

namespace {

struct Term {
  std::int64_t coef;
  Exponent exp;
};

std::vector<Term> compile(const SparsePoly& p, std::int64_t q) {
  if (!ff::is_prime(q)) throw DomainError("q=" + std::to_string(q) + " is not prime (prime powers unsupported)");
  std::vector<Term> t;
  for (const auto& [e, c] : p.terms()) {
    auto r = ff::reduce(c, q);
    if (r) t.push_back({r, e});
  }
  return t;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b && r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

// Enumerates the torus over `vars`, calling f(value) per point.
template <class F>
void for_torus_values(const SparsePoly& p, const IndexSet& vars, std::int64_t q, Budget& budget, F&& f) {
  auto terms = compile(p, q);
  budget.charge(ipow(static_cast<std::uint64_t>(q - 1), vars.size()) * std::max<std::size_t>(terms.size(), 1),
                "torus count");
  std::vector<std::int64_t> pt(p.n_vars(), 1);
  while (true) {
    std::int64_t v = 0;
    for (const auto& t : terms) {
      std::int64_t x = t.coef;
      for (auto i : vars)
        if (t.exp[i]) x = x * ff::pow(pt[i], t.exp[i], q) % q;
      v = (v + x) % q;
    }
    f(v);
    std::size_t k = 0;
    for (; k < vars.size(); ++k) {
      if (++pt[vars[k]] < q) break;
      pt[vars[k]] = 1;
    }
    if (k == vars.size()) break;
  }
}

IndexSet all_vars(const SparsePoly& p) {
  IndexSet v(p.n_vars());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

FiberCounts count_torus_fiber(const SparsePoly& p, const IndexSet& vars, std::int64_t q, Budget& budget) {
  FiberCounts fc(q);
  for_torus_values(p, vars, q, budget, [&](std::int64_t v) {
    if (v) fc.at(v) += 1;
  });
  return fc;
}

FiberCounts count_torus_fiber(const SparsePoly& p, std::int64_t q, Budget& budget) {
  return count_torus_fiber(p, all_vars(p), q, budget);
}

Int count_torus_zero(const SparsePoly& p, const IndexSet& vars, std::int64_t q, Budget& budget) {
  Int n = 0;
  for_torus_values(p, vars, q, budget, [&](std::int64_t v) {
    if (!v) ++n;
  });
  return n;
}

Int count_torus_zero(const SparsePoly& p, std::int64_t q, Budget& budget) {
  return count_torus_zero(p, all_vars(p), q, budget);
}

namespace {

using Series = std::vector<std::int64_t>;

// Jets given per variable by a range of free coefficient slots.
struct JetEnumerator {
  const std::vector<Term>& terms;
  std::size_t n;
  long m;
  std::int64_t q;
  std::vector<long> first;     // lowest order present per variable (> m: variable is zero)
  std::vector<bool> leading_unit;

  JetCount run(Budget& budget) {
    JetCount out{0, FiberCounts(q)};
    std::vector<Series> x(n, Series(static_cast<std::size_t>(m + 1), 0));
    struct Slot {
      std::size_t var;
      long order;
      std::int64_t lo;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (long j = first[i]; j <= m; ++j) slots.push_back({i, j, (j == first[i] && leading_unit[i]) ? 1 : 0});
    std::uint64_t size = 1;
    for (const auto& s : slots) size = std::min<std::uint64_t>(UINT64_MAX / 2, size * static_cast<std::uint64_t>(q - s.lo));
    budget.charge(size * std::max<std::size_t>(terms.size(), 1), "jet enumeration");
    for (const auto& s : slots) x[s.var][static_cast<std::size_t>(s.order)] = s.lo;

    const std::size_t M = static_cast<std::size_t>(m + 1);
    auto mul = [&](const Series& a, const Series& b) {
      Series r(M, 0);
      for (std::size_t i = 0; i < M; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; i + j < M; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
      }
      return r;
    };
    while (true) {
      Series g(M, 0);
      for (const auto& t : terms) {
        Series acc(M, 0);
        acc[0] = t.coef;
        for (std::size_t i = 0; i < n; ++i)
          for (std::int64_t e = 0; e < t.exp[i]; ++e) acc = mul(acc, x[i]);
        for (std::size_t k = 0; k < M; ++k) g[k] = (g[k] + acc[k]) % q;
      }
      bool low_zero = std::all_of(g.begin(), g.end() - 1, [](auto v) { return v == 0; });
      if (low_zero && g[M - 1]) {
        ++out.total;
        out.by_ac.at(g[M - 1]) += 1;
      }
      std::size_t k = 0;
      for (; k < slots.size(); ++k) {
        auto& c = x[slots[k].var][static_cast<std::size_t>(slots[k].order)];
        if (++c < q) break;
        c = slots[k].lo;
      }
      if (k == slots.size()) break;
    }
    return out;
  }
};

}  // namespace

JetCount jet_count(const SparsePoly& g, const std::vector<long>& a, long m, std::int64_t q, Budget& budget) {
  if (a.size() != g.n_vars()) throw DomainError("order vector has wrong length");
  if (m < 1) throw DomainError("jet order must be at least 1");
  for (auto ai : a)
    if (ai < 0) throw DomainError("negative order in jet specification");
  if (std::any_of(a.begin(), a.end(), [&](long ai) { return ai > m; })) return {0, FiberCounts(q)};
  auto terms = compile(g, q);
  JetEnumerator en{terms, g.n_vars(), m, q, a, std::vector<bool>(g.n_vars(), true)};
  return en.run(budget);
}

JetCount jet_count_all(const SparsePoly& g, std::size_t n1, long m, std::int64_t q, Budget& budget) {
  if (m < 1) throw DomainError("jet order must be at least 1");
  auto terms = compile(g, q);
  std::vector<long> first(g.n_vars());
  for (std::size_t i = 0; i < first.size(); ++i) first[i] = i < n1 ? 0 : 1;
  JetEnumerator en{terms, g.n_vars(), m, q, first, std::vector<bool>(g.n_vars(), false)};
  return en.run(budget);
}

std::vector<Laurent> series_coeff_brute(const RationalCone& cone, const IntVec& l, const IntVec& lp, long K,
                                        Budget& budget) {
  const std::size_t n = cone.ambient_dim();
  std::vector<Laurent> out(static_cast<std::size_t>(K + 1));
  if (cone.is_empty()) return out;
  std::vector<long> bound(n, 0);
  for (const auto& r : cone.rays()) {
    Int lr = linalg::dot(l, r);
    if (lr <= 0) throw DomainError("slices are infinite: T-exponent form is not positive on ray " + to_string(r));
    for (std::size_t i = 0; i < n; ++i) {
      Int b = (Int(K) * abs(r[i])) / lr;
      bound[i] = std::max(bound[i], b.get_si());
    }
  }
  std::uint64_t size = 1;
  for (auto b : bound) size = std::min<std::uint64_t>(UINT64_MAX / 4, size * static_cast<std::uint64_t>(2 * b + 1));
  budget.charge(size, "series coefficient enumeration");
  IntVec k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = -bound[i];
  while (true) {
    if (!linalg::is_zero(k) && cone.contains(k)) {
      Int lk = linalg::dot(l, k);
      if (lk <= K) out[static_cast<std::size_t>(lk.get_si())] += Laurent::L(-linalg::dot(lp, k).get_si());
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++k[i] <= bound[i]) break;
      k[i] = -bound[i];
    }
    if (i == n) break;
  }
  return out;
}

SparsePoly partial_derivative(const SparsePoly& p, std::size_t var) {
  SparsePoly r(p.n_vars(), p.partition());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * Rat(static_cast<long>(e[var])));
  }
  return r;
}

std::string ProbeVerdict::str() const {
  std::ostringstream os;
  if (!falsified) {
    os << "nondegeneracy not falsified at q in {";
    for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
    os << '}';
    return os.str();
  }
  os << "face " << face << " is singular on the torus over F_" << q << " at";
  for (std::size_t i = 0; i < witness.size(); ++i) os << " x" << witness_vars[i] + 1 << '=' << witness[i];
  return os.str();
}

ProbeVerdict nondegeneracy_probe(const std::vector<ProbeFace>& faces, const std::vector<std::int64_t>& primes,
                                 Budget& budget) {
  ProbeVerdict v;
  for (auto q : primes) {
    bool usable = true;
    std::vector<std::pair<std::vector<Term>, std::vector<std::vector<Term>>>> compiled;
    try {
      for (const auto& f : faces) {
        std::vector<std::vector<Term>> parts;
        for (auto i : f.poly.variables()) parts.push_back(compile(partial_derivative(f.poly, i), q));
        compiled.emplace_back(compile(f.poly, q), std::move(parts));
      }
    } catch (const DomainError&) {
      usable = false;
    }
    if (!usable) {
      v.skipped.push_back(q);
      continue;
    }
    v.primes.push_back(q);
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      const auto& f = faces[fi];
      if (f.poly.size() < 2) continue;  // monomials never vanish on the torus
      auto vars = f.poly.variables();
      budget.charge(ipow(static_cast<std::uint64_t>(q - 1), vars.size()) * f.poly.size() * (vars.size() + 1),
                    "nondegeneracy probe");
      std::vector<std::int64_t> pt(f.poly.n_vars(), 1);
      auto eval = [&](const std::vector<Term>& terms) {
        std::int64_t s = 0;
        for (const auto& t : terms) {
          std::int64_t x = t.coef;
          for (auto i : vars)
            if (t.exp[i]) x = x * ff::pow(pt[i], t.exp[i], q) % q;
          s = (s + x) % q;
        }
        return s;
      };
      while (true) {
        if (eval(compiled[fi].first) == 0 &&
            std::all_of(compiled[fi].second.begin(), compiled[fi].second.end(),
                        [&](const auto& d) { return eval(d) == 0; })) {
          v.falsified = true;
          v.face = f.label;
          v.q = q;
          v.witness_vars = vars;
          for (auto i : vars) v.witness.push_back(pt[i]);
          return v;
        }
        std::size_t k = 0;
        for (; k < vars.size(); ++k) {
          if (++pt[vars[k]] < q) break;
          pt[vars[k]] = 1;
        }
        if (k == vars.size()) break;
      }
    }
  }
  return v;
}

FiberCounts realize(const MotClass& m, std::int64_t q, Budget& budget) {
  if (m.base() && *m.base() != Base::Torus)
    throw DomainError("realize expects a class over Gm, got " + to_string(*m.base()));
  FiberCounts out(q);
  for (const auto& [atom, coef] : m.terms()) {
    FiberCounts part(q);
    switch (atom.kind) {
      case AtomKind::Unit:
        for (auto& c : part.counts) c = 1;
        break;
      case AtomKind::HypTorus: {
        auto p = atom.polynomial();
        part = count_torus_fiber(p, p.variables(), q, budget);
        break;
      }
      case AtomKind::ZeroTorus: {
        auto p = atom.polynomial();
        Int z = count_torus_zero(p, p.variables(), q, budget);
        for (auto& c : part.counts) c = z;
        break;
      }
    }
    part *= coef.evaluate(q);
    out += part;
  }
  return out;
}

}  // namespace nmz
