#include "nmz/motivic.hpp"

#include <sstream>
#include <tuple>

namespace nmz {

std::string to_string(Base b) {
  switch (b) {
    case Base::ZeroLocus: return "X0xGm";
    case Base::AffineBlock: return "A^n1xGm";
    case Base::Torus: return "Gm";
  }
  return "?";
}

std::string to_string(AtomKind k) {
  switch (k) {
    case AtomKind::Unit: return "Unit";
    case AtomKind::HypTorus: return "HypTorus";
    case AtomKind::ZeroTorus: return "ZeroTorus";
  }
  return "?";
}

namespace {
Atom from_poly(AtomKind k, const SparsePoly& f, std::optional<IndexSet> audit) {
  Atom a;
  a.kind = k;
  a.n_vars = f.n_vars();
  a.poly = f.terms();
  a.audit = std::move(audit);
  return a;
}
}  // namespace

Atom Atom::hyp(const SparsePoly& f, std::optional<IndexSet> audit) {
  return from_poly(AtomKind::HypTorus, f, std::move(audit));
}

Atom Atom::zero(const SparsePoly& f, std::optional<IndexSet> audit) {
  return from_poly(AtomKind::ZeroTorus, f, std::move(audit));
}

SparsePoly Atom::polynomial() const {
  SparsePoly p(n_vars, Partition{n_vars, 0, 0});
  for (const auto& [e, c] : poly) p.add_term(e, c);
  return p;
}

IndexSet Atom::variables() const { return polynomial().variables(); }

std::string Atom::str() const {
  std::string s = to_string(kind);
  if (kind != AtomKind::Unit) s += "[" + polynomial().str() + "]";
  if (audit) s += "@" + to_string(*audit);
  return s;
}

bool operator<(const Atom& a, const Atom& b) {
  return std::tie(a.kind, a.n_vars, a.poly, a.audit) < std::tie(b.kind, b.n_vars, b.poly, b.audit);
}

MotClass MotClass::of(Base b, const Atom& a, const Laurent& c) {
  MotClass m(b);
  m.add(a, c);
  return m;
}

void MotClass::add(const Atom& a, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MotClass::check_base(const MotClass& o) {
  if (!o.base_) return;
  if (!base_) {
    base_ = o.base_;
    return;
  }
  if (*base_ != *o.base_)
    throw DomainError("combining classes over " + to_string(*base_) + " and " + to_string(*o.base_));
}

MotClass& MotClass::operator+=(const MotClass& o) {
  check_base(o);
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

MotClass& MotClass::operator-=(const MotClass& o) {
  check_base(o);
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

MotClass MotClass::operator-() const {
  MotClass r(*this);
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

MotClass& MotClass::scale(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

MotClass MotClass::pushforward() const {
  if (base_ && *base_ != Base::AffineBlock)
    throw DomainError("pushforward expects a class over A^n1 x Gm, got " + to_string(*base_));
  MotClass r(Base::Torus);
  for (const auto& [a, c] : terms_) {
    Atom b = a;
    b.audit.reset();
    r.add(b, c);
  }
  return r;
}

MotClass MotClass::shift_variables(std::size_t n_vars, std::size_t offset) const {
  MotClass r;
  r.base_ = base_;
  for (const auto& [a, c] : terms_) {
    Atom b = a;
    if (a.kind != AtomKind::Unit) {
      if (offset + a.n_vars > n_vars) throw DomainError("shift_variables: target too small");
      b.n_vars = n_vars;
      b.poly.clear();
      for (const auto& [e, x] : a.poly) {
        Exponent f(n_vars, 0);
        std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
        b.poly[f] = x;
      }
    }
    r.add(b, c);
  }
  return r;
}

MotClass MotClass::with_base(Base b) const {
  MotClass r = *this;
  r.base_ = b;
  return r;
}

std::string MotClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << a.str();
  }
  return os.str();
}

namespace {
bool is_monomial(const SparsePoly& f) { return f.size() == 1; }
}  // namespace

MotClass hypersurface_class(const SparsePoly& f, std::size_t n, Base base, std::optional<IndexSet> audit) {
  const auto vars = f.variables();
  MotClass m(base);
  m.add(Atom::hyp(f, std::move(audit)), Laurent::L_minus_one(static_cast<unsigned>(n - vars.size())));
  return m;
}

MotClass zero_locus_class(const SparsePoly& f, std::size_t n, Base base, std::optional<IndexSet> audit) {
  MotClass m(base);
  if (is_monomial(f)) return m;
  const auto vars = f.variables();
  m.add(Atom::zero(f, std::move(audit)), Laurent::L_minus_one(static_cast<unsigned>(n - vars.size())));
  return m;
}

}  // namespace nmz
