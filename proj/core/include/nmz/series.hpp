#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nmz/cone.hpp"
#include "nmz/laurent.hpp"

namespace nmz {

/// Multiset of factors p_{e,i}(T) = L^e T^i / (1 - L^e T^i), sorted.
using FactorKey = std::vector<std::pair<long, long>>;

/// Finite sum of coefficient * product of p_{e,i}(T). The empty product is 1.
/// Coef needs +=, unary -, is_zero() and multiplication by Laurent.
template <class Coef>
class SrSeries {
 public:
  SrSeries() = default;
  static SrSeries constant(Coef c) {
    SrSeries s;
    s.add_term({}, std::move(c));
    return s;
  }

  const std::map<FactorKey, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(FactorKey key, const Coef& c) {
    for (const auto& [e, i] : key)
      if (i <= 0) throw DomainError("series factor p_{" + std::to_string(e) + "," + std::to_string(i) + "} has non-positive T exponent");
    std::sort(key.begin(), key.end());
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SrSeries& operator+=(const SrSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  friend SrSeries operator+(SrSeries a, const SrSeries& b) { return a += b; }

  /// Multiplies every coefficient by a scalar (anything Coef can be multiplied by).
  template <class S>
  SrSeries scaled(const S& s) const {
    SrSeries r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
  }
  /// Multiplies every term by p_{e,i}.
  SrSeries mul_geometric(long e, long i) const {
    SrSeries r;
    for (const auto& [k, c] : terms_) {
      FactorKey key = k;
      key.emplace_back(e, i);
      r.add_term(std::move(key), c);
    }
    return r;
  }

  /// T -> infinity: each product of m factors goes to (-1)^m.
  Coef limit() const {
    Coef acc{};
    for (const auto& [k, c] : terms_) {
      if (k.size() % 2 == 0)
        acc += c;
      else
        acc += -c;
    }
    return acc;
  }

  /// Coefficients of T^0 .. T^K of the power-series expansion.
  std::vector<Coef> expand(long K) const {
    std::vector<Coef> out(static_cast<std::size_t>(K + 1));
    for (const auto& [key, c] : terms_) {
      std::vector<Laurent> ser(static_cast<std::size_t>(K + 1));
      ser[0] = Laurent(1);
      for (const auto& [e, i] : key) {
        std::vector<Laurent> next(ser.size());
        for (long m = 0; m <= K; ++m) {
          if (ser[static_cast<std::size_t>(m)].is_zero()) continue;
          for (long k = 1; m + i * k <= K; ++k)
            next[static_cast<std::size_t>(m + i * k)] += ser[static_cast<std::size_t>(m)] * Laurent::L(e * k);
        }
        ser = std::move(next);
      }
      for (long m = 0; m <= K; ++m)
        if (!ser[static_cast<std::size_t>(m)].is_zero()) out[static_cast<std::size_t>(m)] += c * ser[static_cast<std::size_t>(m)];
    }
    return out;
  }

 private:
  std::map<FactorKey, Coef> terms_;
};

using LaurentSeries = SrSeries<Laurent>;

/// Relatively open simplicial cone whose generators extend to a lattice basis.
struct UnimodularCell {
  std::vector<IntVec> gens;
};

/// Disjoint decomposition of the nonzero lattice points of a (possibly mixed
/// open/closed) cone into relatively open unimodular simplicial cones.
/// Throws BudgetExceeded past `cap` cells.
std::vector<UnimodularCell> decompose_open(const RationalCone& cone, std::size_t cap = 10000);

/// Generating series sum over nonzero lattice points k of the cone of
/// L^{-lp(k)} T^{l(k)}. Throws DomainError unless l, lp > 0 on closure minus 0.
LaurentSeries cone_series(const RationalCone& cone, const IntVec& l, const IntVec& lp);

/// Same, with lp allowed to be any form (only l must be positive).
LaurentSeries cone_series_unchecked_weight(const RationalCone& cone, const IntVec& l, const IntVec& lp);

/// Limit of cone_series; for a relatively open cone asserts (-1)^dim.
long open_cone_limit(const RationalCone& cone, const IntVec& l, const IntVec& lp);

/// Limit of a Laurent-coefficient series as an integer-coefficient Laurent value.
inline Laurent series_limit(const LaurentSeries& s) { return s.limit(); }

std::string to_string(const FactorKey& k);

}  // namespace nmz
