#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmz/cone.hpp"
#include "nmz/poly.hpp"

namespace nmz {

/// Options carried by a problem file; absent entries fall back to defaults.
struct ProblemOptions {
  std::vector<std::int64_t> primes;
  std::optional<long> bound;
  std::optional<long> depth;
  std::optional<long> N;
  std::optional<std::uint64_t> budget;
};

/// A polynomial with its variable partition.
///
///   {"dims": [d1, d2, d3] | [n1, n2],
///    "terms": [{"exp": [..], "coef": "p/q"} | [[..], "p/q" | int], ...],
///    "h": [...terms in the d3 third-block variables...],   // optional, adds h^N
///    "options": {"primes": [..], "bound": B, "depth": K, "N": N, "budget": n}}
struct ProblemFile {
  Partition dims;
  bool three_block = false;
  SparsePoly poly;  // g + h^N when "h" is present
  ProblemOptions options;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);
std::string emit_problem(const ProblemFile& p);

/// A cone with the two linear forms of a generating series.
///
///   {"dim": d, "eqs": [..], "weak": [..], "strict": [..], "l": [..], "lp": [..]}
/// or {"generators": [[..], ..], "open": bool, "l": [..], "lp": [..]}
struct ConeSpec {
  HalfSpaces constraints;
  IntVec l, lp;
};

ConeSpec parse_cone_spec(std::string_view text);
ConeSpec load_cone_spec(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace nmz
