#pragma once

#include <map>
#include <string>

#include "nmz/types.hpp"

namespace nmz {

/// Element of Z[L, L^-1]: exponent -> nonzero integer coefficient.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor): integers are constants
  static Laurent L(long e = 1);
  /// (L - 1)^k.
  static Laurent L_minus_one(unsigned k = 1);

  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(long e) const;
  void add(long e, const Int& c);

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  Laurent operator-() const;
  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

  /// Value at L = q.
  Rat evaluate(long q) const;

  /// e.g. "L^2 - 2*L + 1", "L^-3".
  std::string str() const;

 private:
  std::map<long, Int> terms_;
};

}  // namespace nmz
