#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmz/problem.hpp"

namespace nmz {

/// Settings shared by every command.
struct RunOptions {
  std::vector<std::int64_t> q_list{3, 5, 7};
  std::vector<std::int64_t> primes{2, 3, 5, 7, 11};
  long bound = 12;  // coverage box for the fan
  long depth = 8;   // series expansion order
  std::uint64_t budget = 100'000'000;
  bool paper_diff = false;

  /// Problem-file options fill whatever the command line left unset.
  RunOptions merged(const ProblemOptions& o) const;
};

/// exit_code: 0 ok, 1 hypothesis or input failure, 2 internal mismatch.
/// `json` is canonical (sorted keys, rationals as strings); `text` renders the
/// same document for people.
struct Report {
  int exit_code = 0;
  std::string json;
  std::string text;
};

Report cmd_newton(const ProblemFile& pf, const RunOptions& opt);
Report cmd_fan(const ProblemFile& pf, const RunOptions& opt);
/// Milnor fiber at the origin when `pullback` is empty, else pulled back to A^{n1} x G_m.
Report cmd_milnor(const ProblemFile& pf, const RunOptions& opt, std::optional<std::size_t> pullback);
Report cmd_vanishing(const ProblemFile& pf, const RunOptions& opt);
Report cmd_conjecture(const ProblemFile& pf, const RunOptions& opt);
Report cmd_oracle_jets(const ProblemFile& pf, const RunOptions& opt, const std::vector<long>& a, long m,
                       std::int64_t q);
Report cmd_oracle_count(const ProblemFile& pf, const RunOptions& opt, std::int64_t q);
Report cmd_oracle_series(const ConeSpec& spec, const RunOptions& opt);

/// A report carrying only an error message.
Report error_report(const std::string& command, int exit_code, const std::string& message);

/// Expected cell labels of the worked examples, when the input matches one.
std::optional<std::vector<std::string>> expected_cells(const ProblemFile& pf);

}  // namespace nmz
