#include "nmz/laurent.hpp"

#include <sstream>

namespace nmz {

Laurent::Laurent(long c) {
  if (c != 0) terms_[0] = c;
}

Laurent Laurent::L(long e) {
  Laurent r;
  r.terms_[e] = 1;
  return r;
}

Laurent Laurent::L_minus_one(unsigned k) {
  Laurent r(1);
  const Laurent f = L(1) - Laurent(1);
  for (unsigned i = 0; i < k; ++i) r *= f;
  return r;
}

Int Laurent::coefficient(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void Laurent::add(long e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add(ea + eb, ca * cb);
  *this = std::move(r);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Rat Laurent::evaluate(long q) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
      acc += Rat(c * p);
    else {
      Rat t(c, p);
      t.canonicalize();
      acc += t;
    }
  }
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'L';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace nmz
