#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmz/oracles.hpp"
#include "nmz/strata.hpp"
#include "nmz/zeta.hpp"

namespace nmz {

struct CheckOptions {
  std::vector<std::int64_t> probe_primes{2, 3, 5, 7, 11};
  std::vector<std::int64_t> q_list{3, 5, 7, 11};
  std::uint64_t budget = 100'000'000;
};

/// One line of the hypothesis checklist: status is "ok", "fail" or "n/a".
struct Hypothesis {
  std::string name;
  std::string status;
  std::string detail;
};

/// The standard checklist for g with its own partition (n1 = d1); never throws
/// on a failed hypothesis, each line carries its status.
std::vector<Hypothesis> hypothesis_checklist(const SparsePoly& g, const CheckOptions& opt = {});

/// First failed line of a checklist, if any.
std::optional<Hypothesis> first_failure(const std::vector<Hypothesis>& list);

enum class VanishingVerdict { Vanishes, NonzeroWithValue, HypothesisFail };
std::string to_string(VanishingVerdict v);

struct VanishingResult {
  VanishingVerdict verdict = VanishingVerdict::HypothesisFail;
  std::string reason;
  std::string path;  // "vertex-positive" or "general"
  std::vector<Hypothesis> checklist;
  MotClass value;        // pushed-forward face formula
  MotClass exact_value;  // pushed-forward exact strata result
  std::optional<bool> h_side_zero;  // three-block inputs: whether h = 0
  std::vector<FiberCounts> realized;  // value, per q
};

/// Pushforward of the pulled-back Milnor fiber of a balanced (or weight
/// (1,-1,0) degree-zero) polynomial, with hypotheses checked first.
VanishingResult vanishing_check(const SparsePoly& g, const CheckOptions& opt = {});

enum class ConjectureVerdict { SymbolicEqual, RealizationEqual, Mismatch, HypothesisFail };
std::string to_string(ConjectureVerdict v);

struct FiberComparison {
  std::int64_t q = 0;
  FiberCounts lhs, rhs, face_formula;
  bool equal = false;
  bool face_formula_equal = false;
};

struct ConjectureResult {
  ConjectureVerdict verdict = ConjectureVerdict::HypothesisFail;
  std::string reason;
  std::vector<Hypothesis> checklist;
  MotClass lhs;           // exact, pushed forward
  MotClass face_formula;  // closed face formula with arcs off the coordinate planes, pushed forward
  MotClass rhs;           // L^{d1} times the Milnor fiber of h at the origin
  bool face_formula_symbolic_equal = false;
  std::vector<FiberComparison> fibers;
  std::vector<std::string> diagnostics;

  int exit_code() const;
};

/// Compares both sides of the integral identity for a three-block F.
ConjectureResult conjecture_check(const SparsePoly& F, const CheckOptions& opt = {});

/// Jets of weight a and order m against the face class, for every a in
/// [0, a_max]^n with 1 <= l(a) <= l_max and m = l(a) + k, k <= k_max.
struct JetCellCheck {
  std::string face;
  std::vector<long> a;
  long m = 0;
  std::int64_t q = 0;
  FiberCounts brute, predicted;
  bool ok = false;
};
struct JetCheckReport {
  std::vector<JetCellCheck> cases;
  std::size_t skipped_large = 0;  // cases over the enumeration cap
  std::size_t skipped_order = 0;  // some a_i > m
  bool all_ok() const;
};
JetCheckReport jet_form_check(const SparsePoly& g, const std::vector<std::int64_t>& q_list, long a_max, long l_max,
                              long k_max, std::uint64_t per_case_cap, Budget& budget);

}  // namespace nmz
