#include "nmz/report.hpp"

#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nmz/checks.hpp"
#include "nmz/ff.hpp"
#include "nmz/oracles.hpp"
#include "nmz/series.hpp"
#include "nmz/strata.hpp"
#include "nmz/zeta.hpp"

namespace nmz {

using nlohmann::json;

RunOptions RunOptions::merged(const ProblemOptions& o) const {
  RunOptions r = *this;
  if (!o.primes.empty()) r.primes = o.primes;
  if (o.bound) r.bound = *o.bound;
  if (o.depth) r.depth = *o.depth;
  if (o.budget) r.budget = *o.budget;
  return r;
}

namespace {

json jint(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json jvec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jrows(const std::vector<IntVec>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(jvec(r));
  return a;
}

json jclass(const MotClass& m) {
  json terms = json::array();
  for (const auto& [atom, coef] : m.terms()) {
    json t{{"kind", to_string(atom.kind)}, {"coef", coef.str()}};
    if (atom.kind != AtomKind::Unit) t["poly"] = atom.polynomial().str();
    if (atom.audit) t["leant"] = to_string(*atom.audit);
    terms.push_back(std::move(t));
  }
  return json{{"base", m.base() ? to_string(*m.base()) : "unset"}, {"class", m.str()}, {"terms", terms}};
}

json jfibers(const FiberCounts& f) {
  json c = json::array();
  for (const auto& x : f.counts) c.push_back(x.get_str());
  return json{{"q", f.q}, {"by_t", c}};
}

json jhypotheses(const std::vector<Hypothesis>& list) {
  json a = json::array();
  for (const auto& h : list) a.push_back(json{{"name", h.name}, {"status", h.status}, {"detail", h.detail}});
  return a;
}

json jinput(const ProblemFile& pf) {
  json dims = pf.three_block ? json{pf.dims.d1, pf.dims.d2, pf.dims.d3} : json{pf.dims.d1, pf.dims.d2};
  json terms = json::array();
  for (const auto& [e, c] : pf.poly.terms()) terms.push_back(json{{"exp", e}, {"coef", c.get_str()}});
  return json{{"dims", dims}, {"poly", pf.poly.is_zero() ? "0" : pf.poly.str()}, {"terms", terms}};
}

CheckOptions check_options(const RunOptions& opt) {
  CheckOptions c;
  c.probe_primes = opt.primes;
  c.q_list = opt.q_list;
  c.budget = opt.budget;
  return c;
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        os << pad << k << ": " << scalar_text(v) << '\n';
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        os << pad << "- " << scalar_text(v) << '\n';
      } else {
        os << pad << "-\n";
        render(v, indent + 2, os);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

Report finish(json doc, int exit_code) {
  doc["exit_code"] = exit_code;
  Report r;
  r.exit_code = exit_code;
  r.json = doc.dump(2) + "\n";
  std::ostringstream os;
  render(doc, 0, os);
  r.text = os.str();
  return r;
}

// Runs a command body, mapping library errors onto the exit-code contract.
Report guarded(const std::string& command, const std::function<Report()>& body) {
  try {
    return body();
  } catch (const ConsistencyError& e) {
    return error_report(command, 2, e.what());
  } catch (const BudgetExceeded& e) {
    return error_report(command, 1, std::string("budget exceeded: ") + e.what());
  } catch (const Error& e) {
    return error_report(command, 1, e.what());
  }
}

json cone_json(const RationalCone& c) {
  const auto& h = c.constraints();
  return json{{"rays", jrows(c.rays())},
              {"dim", c.dimension()},
              {"eqs", jrows(h.eqs)},
              {"weak", jrows(h.weak)},
              {"strict", jrows(h.strict)}};
}

std::vector<Hypothesis> blocking_only(const std::vector<Hypothesis>& list, const std::set<std::string>& names) {
  std::vector<Hypothesis> out;
  for (const auto& h : list)
    if (names.count(h.name)) out.push_back(h);
  return out;
}

}  // namespace

Report error_report(const std::string& command, int exit_code, const std::string& message) {
  json doc{{"command", command}, {"status", "error"}, {"error", message}};
  return finish(std::move(doc), exit_code);
}

std::optional<std::vector<std::string>> expected_cells(const ProblemFile& pf) {
  if (pf.poly.is_zero()) return std::nullopt;
  const std::size_t n1 = pf.dims.d1;
  const std::vector<Exponent> ex39{{0, 3, 3}, {1, 1, 2}, {2, 0, 2}};
  if (support(pf.poly) == ex39 && n1 == 2)
    return std::vector<std::string>{"P1:{}",   "P1:{1}",   "P2:{}",   "P2:{2}",   "P3:{}",
                                    "P3:{2}",  "P1P2:{}",  "P1P2:{1}", "P2P3:{}", "P2P3:{2}"};
  auto P = newton_polyhedron(pf.poly);
  auto compact = P.compact_faces();
  if (compact.size() == 1 && P.face(compact.front()).dim == 0 && n1 < 20) {
    std::vector<std::string> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n1); ++mask) {
      IndexSet I;
      for (std::size_t i = 0; i < n1; ++i)
        if (mask >> i & 1) I.push_back(i);
      out.push_back("P1:" + to_string(I));
    }
    return out;
  }
  return std::nullopt;
}

Report cmd_newton(const ProblemFile& pf, const RunOptions& opt) {
  return guarded("newton", [&] {
    if (pf.poly.is_zero()) return error_report("newton", 1, "empty support");
    auto P = newton_polyhedron(pf.poly);
    json verts = json::array();
    for (std::size_t i = 0; i < P.vertices().size(); ++i)
      verts.push_back(json{{"label", "P" + std::to_string(i + 1)}, {"coords", P.vertices()[i]}});
    json facets = json::array();
    for (const auto& f : P.facets()) facets.push_back(json{{"normal", jvec(f.normal)}, {"offset", jint(f.offset)}});
    json faces = json::array();
    json compact = json::array();
    for (const auto& f : P.faces()) {
      json vl = json::array();
      for (auto v : f.vertices) vl.push_back("P" + std::to_string(v + 1));
      faces.push_back(json{{"label", f.label},
                           {"dim", f.dim},
                           {"compact", f.compact},
                           {"vertices", vl},
                           {"recession", to_string(f.recession)},
                           {"coordinate_planes", to_string(f.coordinate_planes)}});
      if (f.compact) compact.push_back(f.label);
    }
    json doc{{"command", "newton"},
             {"status", "ok"},
             {"input", jinput(pf)},
             {"hypotheses", jhypotheses(hypothesis_checklist(pf.poly, check_options(opt)))},
             {"result",
              {{"vertices", verts},
               {"facets", facets},
               {"faces", faces},
               {"compact_faces", compact},
               {"compact_face_count", compact.size()}}}};
    return finish(std::move(doc), 0);
  });
}

Report cmd_fan(const ProblemFile& pf, const RunOptions& opt) {
  return guarded("fan", [&] {
    const std::size_t n = pf.poly.n_vars();
    const std::size_t n1 = pf.dims.d1;
    if (n == n1) return error_report("fan", 1, "n2 must be >= 1");
    if (pf.poly.is_zero()) return error_report("fan", 1, "empty support");
    auto P = newton_polyhedron(pf.poly);
    auto part = canonical_partition(P, n1);

    json cells = json::array();
    std::vector<RationalCone> closed;
    for (const auto& c : part.cells) {
      json cell{{"label", c.label}, {"face", P.face(c.face).label}, {"leant", to_string(c.leant)},
                {"cone", cone_json(c.cone)}};
      cells.push_back(std::move(cell));
      closed.push_back(c.cone.closure());
    }
    FanCheck fc = fan_check(closed, n1);
    CoverageReport cov = partition_coverage(part, n, n1, opt.bound);
    json diagnostics = part.diagnostics;
    json result{{"cells", cells},
                {"cell_count", part.cells.size()},
                {"fan_check", {{"ok", fc.ok}, {"reason", fc.reason}}},
                {"coverage",
                 {{"bound", opt.bound},
                  {"points", cov.points},
                  {"uncovered", cov.uncovered},
                  {"overlapping", cov.overlapping},
                  {"witness", cov.witness ? jvec(*cov.witness) : json()}}}};
    if (opt.paper_diff) {
      if (auto expected = expected_cells(pf)) {
        PartitionDiff d = partition_diff(part, *expected);
        result["paper_diff"] = json{{"expected", *expected}, {"missing", d.missing}, {"extra", d.extra}};
        for (const auto& note : d.notes) diagnostics.push_back(note);
      }
    }
    json doc{{"command", "fan"},
             {"status", "ok"},
             {"input", jinput(pf)},
             {"hypotheses", jhypotheses(hypothesis_checklist(pf.poly, check_options(opt)))},
             {"result", result},
             {"diagnostics", diagnostics}};
    const bool ok = fc.ok && cov.ok();
    if (!ok) doc["status"] = "mismatch";
    return finish(std::move(doc), ok ? 0 : 2);
  });
}

Report cmd_milnor(const ProblemFile& pf, const RunOptions& opt, std::optional<std::size_t> pullback) {
  return guarded("milnor", [&] {
    const std::size_t n = pf.poly.n_vars();
    const std::size_t n1 = pullback.value_or(0);
    if (n1 > n) return error_report("milnor", 1, "pullback block larger than the number of variables");
    const SparsePoly g = pf.poly.with_partition(Partition{n1, n - n1, 0});
    auto checklist = blocking_only(hypothesis_checklist(g, check_options(opt)),
                                   {"nonzero", "g(0)=0", "X0 contains A^n1 x 0", "nondegenerate"});
    json doc{{"command", "milnor"},
             {"mode", pullback ? "pullback" : "at-origin"},
             {"n1", n1},
             {"input", jinput(pf)},
             {"hypotheses", jhypotheses(checklist)}};
    if (auto bad = first_failure(checklist)) {
      doc["status"] = "hypothesis-fail";
      doc["error"] = bad->name + ": " + bad->detail;
      return finish(std::move(doc), 1);
    }

    MilnorResult mr = pullback ? milnor_pullback(g, n1) : milnor_at_origin(g);
    json contributions = json::array();
    for (const auto& c : mr.contributions)
      contributions.push_back(json{{"cell", c.label}, {"sign", c.sign}, {"term", jclass(c.term)}});
    json result{{"milnor_fiber", jclass(mr.closed_form)},
                {"from_limit", jclass(mr.from_limit)},
                {"consistent", mr.consistent},
                {"contributions", contributions},
                {"cells", mr.zeta.cells.size()}};
    MotClass over_torus = mr.closed_form;
    if (pullback) {
      over_torus = mr.closed_form.pushforward();
      result["pushforward"] = jclass(over_torus);
      ExactZeta ez = exact_zeta_pullback(g, n1);
      MotClass exact = exact_milnor_pullback(ez);
      result["all_arcs"] = json{{"milnor_fiber", jclass(exact)}, {"pushforward", jclass(exact.pushforward())}};
    }
    json oracle = json::array();
    Budget budget(opt.budget);
    for (auto q : opt.q_list) oracle.push_back(jfibers(realize(over_torus, q, budget)));
    doc["status"] = "ok";
    doc["result"] = result;
    doc["oracle"] = oracle;
    doc["diagnostics"] = mr.zeta.diagnostics;
    return finish(std::move(doc), 0);
  });
}

Report cmd_vanishing(const ProblemFile& pf, const RunOptions& opt) {
  return guarded("vanishing", [&] {
    VanishingResult v = vanishing_check(pf.poly, check_options(opt));
    json doc{{"command", "vanishing"},
             {"input", jinput(pf)},
             {"hypotheses", jhypotheses(v.checklist)},
             {"verdict", to_string(v.verdict)}};
    if (v.verdict == VanishingVerdict::HypothesisFail) {
      doc["status"] = "hypothesis-fail";
      doc["error"] = v.reason;
      return finish(std::move(doc), 1);
    }
    json oracle = json::array();
    for (const auto& f : v.realized) oracle.push_back(jfibers(f));
    json result{{"path", v.path}, {"value", jclass(v.value)}, {"all_arcs_value", jclass(v.exact_value)}};
    if (v.h_side_zero) result["h_is_zero"] = *v.h_side_zero;
    doc["status"] = "ok";
    doc["result"] = result;
    doc["oracle"] = oracle;
    return finish(std::move(doc), 0);
  });
}

Report cmd_conjecture(const ProblemFile& pf, const RunOptions& opt) {
  return guarded("conjecture", [&] {
    ConjectureResult c = conjecture_check(pf.poly, check_options(opt));
    json doc{{"command", "conjecture"},
             {"input", jinput(pf)},
             {"hypotheses", jhypotheses(c.checklist)},
             {"verdict", to_string(c.verdict)}};
    if (c.verdict == ConjectureVerdict::HypothesisFail) {
      doc["status"] = "hypothesis-fail";
      doc["error"] = c.reason;
      return finish(std::move(doc), 1);
    }
    json fibers = json::array();
    for (const auto& f : c.fibers)
      fibers.push_back(json{{"q", f.q},
                            {"lhs", jfibers(f.lhs)["by_t"]},
                            {"rhs", jfibers(f.rhs)["by_t"]},
                            {"face_formula", jfibers(f.face_formula)["by_t"]},
                            {"equal", f.equal},
                            {"face_formula_equal", f.face_formula_equal}});
    doc["status"] = c.exit_code() == 0 ? "ok" : "mismatch";
    doc["result"] = json{{"lhs", jclass(c.lhs)},
                         {"rhs", jclass(c.rhs)},
                         {"face_formula", jclass(c.face_formula)},
                         {"face_formula_symbolic_equal", c.face_formula_symbolic_equal}};
    doc["oracle"] = fibers;
    doc["diagnostics"] = c.diagnostics;
    return finish(std::move(doc), c.exit_code());
  });
}

Report cmd_oracle_jets(const ProblemFile& pf, const RunOptions& opt, const std::vector<long>& a, long m,
                       std::int64_t q) {
  return guarded("oracle jets", [&] {
    if (a.size() != pf.poly.n_vars()) return error_report("oracle jets", 1, "weight vector has wrong length");
    if (m < 1) return error_report("oracle jets", 1, "jet order must be positive");
    if (!ff::is_prime(q)) return error_report("oracle jets", 1, "q must be prime");
    Budget budget(opt.budget);
    JetCount jc = jet_count(pf.poly, a, m, q, budget);
    json doc{{"command", "oracle jets"},
             {"status", "ok"},
             {"input", jinput(pf)},
             {"query", {{"a", a}, {"m", m}, {"q", q}}},
             {"result", {{"total", jc.total.get_str()}, {"by_leading_coefficient", jfibers(jc.by_ac)}}}};
    return finish(std::move(doc), 0);
  });
}

Report cmd_oracle_count(const ProblemFile& pf, const RunOptions& opt, std::int64_t q) {
  return guarded("oracle count", [&] {
    if (!ff::is_prime(q)) return error_report("oracle count", 1, "q must be prime");
    Budget budget(opt.budget);
    FiberCounts f = count_torus_fiber(pf.poly, q, budget);
    Int z = count_torus_zero(pf.poly, q, budget);
    json doc{{"command", "oracle count"},
             {"status", "ok"},
             {"input", jinput(pf)},
             {"query", {{"q", q}}},
             {"result", {{"fibers", jfibers(f)}, {"zeros", z.get_str()}}}};
    return finish(std::move(doc), 0);
  });
}

Report cmd_oracle_series(const ConeSpec& spec, const RunOptions& opt) {
  return guarded("oracle series", [&] {
    RationalCone cone(spec.constraints);
    LaurentSeries s = cone_series(cone, spec.l, spec.lp);
    auto closed = s.expand(opt.depth);
    Budget budget(opt.budget);
    auto brute = series_coeff_brute(cone, spec.l, spec.lp, opt.depth, budget);
    json cf = json::array(), bf = json::array();
    for (const auto& c : closed) cf.push_back(c.str());
    for (const auto& c : brute) bf.push_back(c.str());
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back(json{{"factors", to_string(k)}, {"coef", c.str()}});
    const bool agree = closed == brute;
    json doc{{"command", "oracle series"},
             {"status", agree ? "ok" : "mismatch"},
             {"input", {{"cone", cone_json(cone)}, {"l", jvec(spec.l)}, {"lp", jvec(spec.lp)}}},
             {"query", {{"depth", opt.depth}}},
             {"result",
              {{"terms", terms},
               {"coefficients", cf},
               {"brute_force", bf},
               {"agree", agree},
               {"limit", s.limit().str()}}}};
    return finish(std::move(doc), agree ? 0 : 2);
  });
}

}  // namespace nmz
