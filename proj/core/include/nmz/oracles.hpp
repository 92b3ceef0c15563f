#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nmz/cone.hpp"
#include "nmz/laurent.hpp"
#include "nmz/motivic.hpp"
#include "nmz/poly.hpp"

namespace nmz {

/// Enumeration allowance in elementary evaluations. Exceeding it throws
/// BudgetExceeded; nothing is ever silently truncated.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = 100'000'000) : limit_(limit) {}
  void charge(std::uint64_t n, const std::string& what);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Values over each t in F_q^*, stored at index t-1. Virtual classes may
/// realize to negative or (after division by q^k) fractional values.
struct FiberCounts {
  std::int64_t q = 0;
  std::vector<Rat> counts;

  explicit FiberCounts(std::int64_t q_ = 0) : q(q_), counts(q_ > 1 ? static_cast<std::size_t>(q_ - 1) : 0) {}
  const Rat& at(std::int64_t t) const { return counts.at(static_cast<std::size_t>(t - 1)); }
  Rat& at(std::int64_t t) { return counts.at(static_cast<std::size_t>(t - 1)); }
  Rat total() const;
  FiberCounts& operator+=(const FiberCounts& o);
  FiberCounts& operator*=(const Rat& c);
  friend bool operator==(const FiberCounts& a, const FiberCounts& b) { return a.q == b.q && a.counts == b.counts; }
  std::string str() const;
};

/// #{xi in (F_q^*)^vars : p(xi) = t} for each t. Variables not in `vars` are
/// not enumerated; by default vars = all variables of the polynomial ring.
FiberCounts count_torus_fiber(const SparsePoly& p, std::int64_t q, Budget& budget);
FiberCounts count_torus_fiber(const SparsePoly& p, const IndexSet& vars, std::int64_t q, Budget& budget);
Int count_torus_zero(const SparsePoly& p, std::int64_t q, Budget& budget);
Int count_torus_zero(const SparsePoly& p, const IndexSet& vars, std::int64_t q, Budget& budget);

struct JetCount {
  Int total = 0;
  FiberCounts by_ac;
};

/// m-jets x_i(t) = sum_{j=a_i}^m c_{i,j} t^j with c_{i,a_i} != 0 and
/// ord_t g = m, bucketed by the leading coefficient of g. Returns zero when
/// some a_i > m.
JetCount jet_count(const SparsePoly& g, const std::vector<long>& a, long m, std::int64_t q, Budget& budget);

/// All m-jets with x_i(0) = 0 for i >= n1 and ord_t g = m, bucketed by the
/// leading coefficient. Divided by q^{nm} this realizes the T^m coefficient of
/// the zeta function pulled back to A^{n1} x G_m.
JetCount jet_count_all(const SparsePoly& g, std::size_t n1, long m, std::int64_t q, Budget& budget);

/// Coefficients of T^0..T^K of sum over nonzero lattice points k of the cone
/// of L^{-lp(k)} T^{l(k)}, by direct enumeration.
std::vector<Laurent> series_coeff_brute(const RationalCone& cone, const IntVec& l, const IntVec& lp, long K,
                                        Budget& budget);

struct ProbeFace {
  std::string label;
  SparsePoly poly;
};
struct ProbeVerdict {
  bool falsified = false;
  std::string face;
  std::vector<std::int64_t> witness;  // values of the face's variables, in order
  IndexSet witness_vars;
  std::int64_t q = 0;
  std::vector<std::int64_t> primes;   // primes actually searched
  std::vector<std::int64_t> skipped;  // primes dividing a coefficient denominator
  std::string str() const;
};
/// Searches the torus for singular points of each face polynomial.
ProbeVerdict nondegeneracy_probe(const std::vector<ProbeFace>& faces, const std::vector<std::int64_t>& primes,
                                 Budget& budget);

/// Point-count realization of a class over G_m (L -> q).
FiberCounts realize(const MotClass& m, std::int64_t q, Budget& budget);

SparsePoly partial_derivative(const SparsePoly& p, std::size_t var);

}  // namespace nmz
