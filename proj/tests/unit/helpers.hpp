#pragma once

#include <utility>
#include <vector>

#include "nmz/poly.hpp"

namespace nmz::test {

inline SparsePoly poly(Partition p, const std::vector<std::pair<Exponent, long>>& terms) {
  SparsePoly f(p.size(), p);
  for (const auto& [e, c] : terms) f.add_term(e, Rat(c));
  return f;
}

inline SparsePoly poly(std::size_t n, const std::vector<std::pair<Exponent, long>>& terms) {
  return poly(Partition{n, 0, 0}, terms);
}

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

// The worked three-variable example: x^2 z^2 + x y z^2 + y^3 z^3.
inline SparsePoly worked_example(Partition p = Partition{2, 0, 1}) {
  return poly(p, {{{2, 0, 2}, 1}, {{1, 1, 2}, 1}, {{0, 3, 3}, 1}});
}

}  // namespace nmz::test
