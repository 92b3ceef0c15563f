#pragma once

#include <cstdint>

#include "nmz/types.hpp"

// Prime-field helpers. Only prime q is supported; q stays small (the
// oracles enumerate (q-1)^n points), so 64-bit products never overflow.
namespace nmz::ff {

inline bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline std::int64_t reduce(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

inline std::int64_t reduce(const Int& a, std::int64_t q) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(q));
  return static_cast<std::int64_t>(r.get_si());
}

inline std::int64_t pow(std::int64_t base, std::int64_t e, std::int64_t q) {
  std::int64_t r = 1 % q;
  base = reduce(base, q);
  while (e > 0) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t q) { return pow(a, q - 2, q); }

/// Reduction of a rational number; throws DomainError when q divides the denominator.
inline std::int64_t reduce(const Rat& a, std::int64_t q) {
  std::int64_t den = reduce(a.get_den(), q);
  if (den == 0)
    throw DomainError("coefficient " + a.get_str() + " has denominator divisible by q=" + std::to_string(q));
  return reduce(a.get_num(), q) * inverse(den, q) % q;
}

}  // namespace nmz::ff
