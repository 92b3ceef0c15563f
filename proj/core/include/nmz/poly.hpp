#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmz/types.hpp"

namespace nmz {

/// Variable partition x | y | z. The two-block form (n1, n2) is d3 = 0.
/// Block 1 carries weight +1, block 2 weight -1, block 3 weight 0.
struct Partition {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::size_t d3 = 0;

  std::size_t size() const { return d1 + d2 + d3; }
  /// 0, 1 or 2.
  int block_of(std::size_t var) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Exact sparse multivariate polynomial with rational coefficients.
/// No stored coefficient is ever zero.
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Rat>;

  SparsePoly() = default;
  SparsePoly(std::size_t n_vars, Partition partition);

  /// Collects repeated exponents and drops zero coefficients.
  static SparsePoly from_terms(std::size_t n_vars, Partition partition,
                               const std::vector<std::pair<Exponent, Rat>>& terms);
  static SparsePoly monomial(std::size_t n_vars, Partition partition, Exponent e, Rat c = 1);

  std::size_t n_vars() const { return n_vars_; }
  const Partition& partition() const { return partition_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const;

  Rat coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rat& c);

  SparsePoly with_partition(Partition p) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly pow(unsigned e) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Variables occurring in some monomial.
  IndexSet variables() const;

  /// Human-readable form, e.g. "x1^2*x3^2 + x1*x2*x3^2".
  std::string str() const;

 private:
  void check_exponent(const Exponent& e) const;

  std::size_t n_vars_ = 0;
  Partition partition_;
  Terms terms_;
};

/// Exponents with nonzero coefficient, in lexicographic order.
std::vector<Exponent> support(const SparsePoly& p);

/// Sub-polynomial on the given exponents (exponents absent from p are ignored).
SparsePoly restrict_terms(const SparsePoly& p, const std::vector<Exponent>& keep);

struct BalanceCheck {
  bool balanced = true;
  std::optional<Exponent> witness;
};

/// Every support exponent has (block-1 sum) == (block-2 sum); block 3 is weight zero.
BalanceCheck check_balanced(const SparsePoly& p);

/// Terms supported in block 3 only, as a polynomial in d3 variables (single block).
SparsePoly extract_h(const SparsePoly& f);

/// Re-index p into `n_vars` variables, variable i going to offset + i.
SparsePoly embed(const SparsePoly& p, std::size_t n_vars, std::size_t offset, Partition partition);

/// Substitute zero for the variables in `zero_vars`.
SparsePoly set_to_zero(const SparsePoly& p, const IndexSet& zero_vars);

/// Exact evaluation in F_q (q prime). Throws DomainError on bad denominators.
std::int64_t eval_mod_q(const SparsePoly& p, const std::vector<std::int64_t>& point, std::int64_t q);

/// Problem-file grammar (JSON); see problem.hpp for the full document.
SparsePoly parse_poly(std::string_view text);
std::string emit_poly(const SparsePoly& p);

}  // namespace nmz
