// Command-line front end: every subcommand prints one report and exits with
// its code (0 ok, 1 hypothesis or input failure, 2 mismatch).
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nmz/report.hpp"

namespace {

struct Globals {
  bool json = false;
  std::vector<std::int64_t> q_list;
  std::vector<std::int64_t> primes;
  std::optional<long> bound, depth;
  std::optional<std::uint64_t> budget;
  bool paper_diff = false;
};

nmz::RunOptions resolve(const Globals& g, const nmz::ProblemOptions& file) {
  nmz::RunOptions o = nmz::RunOptions{}.merged(file);
  if (const char* env = std::getenv("NMZ_BUDGET")) {
    try {
      o.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed NMZ_BUDGET\n";
    }
  }
  if (!g.q_list.empty()) o.q_list = g.q_list;
  if (!g.primes.empty()) o.primes = g.primes;
  if (g.bound) o.bound = *g.bound;
  if (g.depth) o.depth = *g.depth;
  if (g.budget) o.budget = *g.budget;
  o.paper_diff = g.paper_diff;
  return o;
}

int emit(const nmz::Report& r, const Globals& g) {
  std::cout << (g.json ? r.json : r.text);
  return r.exit_code;
}

template <class F>
int with_problem(const std::string& command, const std::string& path, const Globals& g, F body) {
  nmz::ProblemFile pf;
  try {
    pf = nmz::load_problem(path);
  } catch (const nmz::Error& e) {
    return emit(nmz::error_report(command, 1, e.what()), g);
  }
  return emit(body(pf, resolve(g, pf.options)), g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polyhedra, motivic zeta functions and Milnor fibers"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "print the canonical JSON report");
  app.add_option("--q-list", g.q_list, "primes for point-count realizations")->delimiter(',');
  app.add_option("--primes", g.primes, "primes for the nondegeneracy probe")->delimiter(',');
  app.add_option("--bound", g.bound, "coverage box for the fan");
  app.add_option("--depth", g.depth, "series expansion order");
  app.add_option("--budget", g.budget, "enumeration budget (env NMZ_BUDGET)");
  app.add_flag("--paper-diff", g.paper_diff, "compare cells against the worked examples");
  app.fallthrough();

  std::string file;
  int code = 0;

  auto* newton = app.add_subcommand("newton", "Newton polyhedron, faces and normals");
  newton->add_option("file", file, "problem file")->required();
  newton->callback([&] { code = with_problem("newton", file, g, nmz::cmd_newton); });

  auto* fan = app.add_subcommand("fan", "canonical partition into dual cones");
  fan->add_option("file", file, "problem file")->required();
  fan->callback([&] { code = with_problem("fan", file, g, nmz::cmd_fan); });

  auto* milnor = app.add_subcommand("milnor", "motivic Milnor fiber");
  milnor->add_option("file", file, "problem file")->required();
  bool at_origin = false;
  std::optional<std::size_t> pullback;
  auto* origin_flag = milnor->add_flag("--at-origin", at_origin, "fiber at the origin");
  auto* pull_opt = milnor->add_option("--pullback", pullback, "pull back to A^n1 x Gm");
  origin_flag->excludes(pull_opt);
  milnor->callback([&] {
    code = with_problem("milnor", file, g, [&](const nmz::ProblemFile& pf, const nmz::RunOptions& o) {
      return nmz::cmd_milnor(pf, o, at_origin ? std::nullopt : pullback);
    });
  });

  auto* vanishing = app.add_subcommand("vanishing", "pushforward of the pulled-back Milnor fiber");
  vanishing->add_option("file", file, "problem file")->required();
  vanishing->callback([&] { code = with_problem("vanishing", file, g, nmz::cmd_vanishing); });

  auto* conjecture = app.add_subcommand("conjecture", "integral identity for a three-block polynomial");
  conjecture->add_option("file", file, "problem file")->required();
  conjecture->callback([&] { code = with_problem("conjecture", file, g, nmz::cmd_conjecture); });

  auto* oracle = app.add_subcommand("oracle", "brute-force evaluations");
  oracle->require_subcommand(1);
  std::vector<long> a;
  long m = 1;
  std::int64_t q = 3;
  auto* jets = oracle->add_subcommand("jets", "count m-jets of weight a");
  jets->add_option("file", file, "problem file")->required();
  jets->add_option("--a", a, "coordinate orders")->delimiter(',')->required();
  jets->add_option("--m", m, "jet order")->required();
  jets->add_option("--q", q, "prime field size")->required();
  jets->callback([&] {
    code = with_problem("oracle jets", file, g, [&](const nmz::ProblemFile& pf, const nmz::RunOptions& o) {
      return nmz::cmd_oracle_jets(pf, o, a, m, q);
    });
  });
  auto* count = oracle->add_subcommand("count", "torus fiber counts of the polynomial");
  count->add_option("file", file, "problem file")->required();
  count->add_option("--q", q, "prime field size")->required();
  count->callback([&] {
    code = with_problem("oracle count", file, g, [&](const nmz::ProblemFile& pf, const nmz::RunOptions& o) {
      return nmz::cmd_oracle_count(pf, o, q);
    });
  });
  auto* series = oracle->add_subcommand("series", "cone generating series against enumeration");
  series->add_option("file", file, "cone spec file")->required();
  std::optional<long> K;
  series->add_option("--K", K, "expansion order (overrides --depth)");
  series->callback([&] {
    nmz::ConeSpec spec;
    try {
      spec = nmz::load_cone_spec(file);
    } catch (const nmz::Error& e) {
      code = emit(nmz::error_report("oracle series", 1, e.what()), g);
      return;
    }
    nmz::RunOptions o = resolve(g, {});
    if (K) o.depth = *K;
    code = emit(nmz::cmd_oracle_series(spec, o), g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return code;
}
