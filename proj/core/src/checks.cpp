#include "nmz/checks.hpp"

#include <set>

namespace nmz {

std::string to_string(VanishingVerdict v) {
  switch (v) {
    case VanishingVerdict::Vanishes: return "Vanishes";
    case VanishingVerdict::NonzeroWithValue: return "NonzeroWithValue";
    case VanishingVerdict::HypothesisFail: return "HypothesisFail";
  }
  return "?";
}

std::string to_string(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::SymbolicEqual: return "SymbolicEqual";
    case ConjectureVerdict::RealizationEqual: return "RealizationEqual";
    case ConjectureVerdict::Mismatch: return "Mismatch";
    case ConjectureVerdict::HypothesisFail: return "HypothesisFail";
  }
  return "?";
}

int ConjectureResult::exit_code() const {
  switch (verdict) {
    case ConjectureVerdict::HypothesisFail: return 1;
    case ConjectureVerdict::Mismatch: return 2;
    default: return 0;
  }
}

bool JetCheckReport::all_ok() const {
  for (const auto& c : cases)
    if (!c.ok) return false;
  return true;
}

namespace {

std::vector<ProbeFace> compact_face_polys(const SparsePoly& g, const std::string& prefix) {
  std::vector<ProbeFace> out;
  if (g.is_zero()) return out;
  auto P = newton_polyhedron(g);
  for (auto id : P.compact_faces()) {
    SparsePoly f = face_poly(g, P, id);
    if (f.size() > 1) out.push_back({prefix + P.face(id).label, f});
  }
  return out;
}

// Runs the blocking hypotheses in order; returns the first failure message.
struct Screen {
  std::vector<Hypothesis> list;
  std::string failure;
  bool ok() const { return failure.empty(); }
  void add(std::string name, bool pass, std::string detail) {
    list.push_back({std::move(name), pass ? "ok" : "fail", detail});
    if (!pass && failure.empty()) failure = list.back().name + ": " + detail;
  }
  void skip(std::string name, std::string why) { list.push_back({std::move(name), "n/a", std::move(why)}); }
};

Screen screen(const SparsePoly& g, const CheckOptions& opt, const std::vector<ProbeFace>& extra_faces,
              bool stop = true) {
  Screen s;
  const Partition& part = g.partition();
  s.add("nonzero", !g.is_zero(), g.is_zero() ? "the polynomial is zero" : "");
  s.add("g(0)=0", !g.has_constant_term(), g.has_constant_term() ? "constant term present" : "");
  auto bal = check_balanced(g);
  s.add(part.d3 ? "weight (1,-1,0) degree zero" : "balanced", bal.balanced,
        bal.witness ? "witness exponent " + to_string(*bal.witness) : "");
  if (g.is_zero() || (stop && !s.ok())) {
    s.skip("X0 contains A^n1 x 0", "earlier hypothesis failed");
    s.skip("nondegenerate", "earlier hypothesis failed");
    s.skip("vertex positivity", "earlier hypothesis failed");
    return s;
  }
  try {
    require_zeta_hypotheses(g, part.d1);
    s.add("X0 contains A^n1 x 0", true, "");
  } catch (const DomainError& e) {
    s.add("X0 contains A^n1 x 0", false, e.what());
    if (stop) return s;
  }
  auto faces = compact_face_polys(g, "");
  faces.insert(faces.end(), extra_faces.begin(), extra_faces.end());
  Budget budget(opt.budget);
  ProbeVerdict probe = nondegeneracy_probe(faces, opt.probe_primes, budget);
  s.add("nondegenerate", !probe.falsified, probe.str());
  const bool positive = vertex_positivity(newton_polyhedron(g));
  s.list.push_back({"vertex positivity", positive ? "ok" : "n/a",
                    positive ? "all vertices have positive coordinates" : "some vertex on a coordinate plane"});
  return s;
}

std::vector<ProbeFace> strata_faces(const SparsePoly& g, std::size_t n1) {
  try {
    return initial_forms(exact_zeta_pullback(g, n1));
  } catch (const DomainError&) {
    return {};
  }
}

}  // namespace

std::vector<Hypothesis> hypothesis_checklist(const SparsePoly& g, const CheckOptions& opt) {
  return screen(g, opt, {}, false).list;
}

std::optional<Hypothesis> first_failure(const std::vector<Hypothesis>& list) {
  for (const auto& h : list)
    if (h.status == "fail") return h;
  return std::nullopt;
}

VanishingResult vanishing_check(const SparsePoly& g, const CheckOptions& opt) {
  VanishingResult r;
  const std::size_t n1 = g.partition().d1;
  Screen s = screen(g, opt, {});
  r.checklist = s.list;
  if (!s.ok()) {
    r.reason = s.failure;
    return r;
  }
  r.path = vertex_positivity(newton_polyhedron(g)) ? "vertex-positive" : "general";

  MilnorResult mr = milnor_pullback(g, n1);
  r.value = mr.closed_form.pushforward();
  r.exact_value = exact_milnor_pullback(exact_zeta_pullback(g, n1)).pushforward();
  if (g.partition().d3) r.h_side_zero = extract_h(g).is_zero();

  Budget budget(opt.budget);
  for (auto q : opt.q_list) r.realized.push_back(realize(r.value, q, budget));
  r.verdict = r.value.is_zero() ? VanishingVerdict::Vanishes : VanishingVerdict::NonzeroWithValue;
  return r;
}

ConjectureResult conjecture_check(const SparsePoly& F, const CheckOptions& opt) {
  ConjectureResult r;
  const Partition& part = F.partition();
  const std::size_t n = F.n_vars();
  const SparsePoly h = extract_h(F);

  std::vector<ProbeFace> extra = compact_face_polys(h, "h:");
  if (!F.is_zero() && !F.has_constant_term()) {
    auto strata = strata_faces(F, part.d1);
    extra.insert(extra.end(), strata.begin(), strata.end());
  }
  Screen s = screen(F, opt, extra);
  r.checklist = s.list;
  if (!s.ok()) {
    r.reason = s.failure;
    return r;
  }

  r.lhs = exact_milnor_pullback(exact_zeta_pullback(F, part.d1)).pushforward();
  r.face_formula = milnor_pullback(F, part.d1).closed_form.pushforward();
  if (h.is_zero()) {
    r.rhs = MotClass(Base::Torus);
  } else {
    MotClass at_origin = milnor_at_origin(h).closed_form;
    r.rhs = (at_origin * Laurent::L(static_cast<long>(part.d1))).shift_variables(n, part.d1 + part.d2);
  }

  const bool symbolic = r.lhs == r.rhs;
  r.face_formula_symbolic_equal = r.face_formula == r.rhs;
  bool all_equal = true;
  Budget budget(opt.budget);
  for (auto q : opt.q_list) {
    FiberComparison fc;
    fc.q = q;
    fc.lhs = realize(r.lhs, q, budget);
    fc.rhs = realize(r.rhs, q, budget);
    fc.face_formula = realize(r.face_formula, q, budget);
    fc.equal = fc.lhs == fc.rhs;
    fc.face_formula_equal = fc.face_formula == fc.rhs;
    all_equal = all_equal && fc.equal;
    r.fibers.push_back(std::move(fc));
  }
  if (!r.face_formula_symbolic_equal)
    r.diagnostics.push_back(
        "face formula restricted to arcs off the coordinate planes gives " + r.face_formula.str() +
        ", which differs from the right-hand side; the arcs it omits carry the difference");
  if (symbolic)
    r.verdict = ConjectureVerdict::SymbolicEqual;
  else if (all_equal)
    r.verdict = ConjectureVerdict::RealizationEqual;
  else
    r.verdict = ConjectureVerdict::Mismatch;
  return r;
}

JetCheckReport jet_form_check(const SparsePoly& g, const std::vector<std::int64_t>& q_list, long a_max, long l_max,
                              long k_max, std::uint64_t per_case_cap, Budget& budget) {
  JetCheckReport rep;
  const std::size_t n = g.n_vars();
  const NewtonPolyhedron P = newton_polyhedron(g);
  std::vector<long> a(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && a[i] == a_max) a[i++] = 0;
    if (i == n) break;
    ++a[i];

    IntVec w(a.begin(), a.end());
    Support sup = l_gamma(P, w);
    const long l = sup.value.get_si();
    if (l < 1 || l > l_max) continue;
    long s = 0;
    for (auto x : a) s += x;
    const Face& eps = P.face(sup.face);
    SparsePoly ge = face_poly(g, P, sup.face);
    MotClass phi = hypersurface_class(ge, n, Base::Torus, std::nullopt);
    MotClass psi = zero_locus_class(ge, n, Base::Torus, std::nullopt);

    for (long k = 0; k <= k_max; ++k) {
      const long m = l + k;
      bool too_deep = false;
      for (auto x : a) too_deep = too_deep || x > m;
      if (too_deep) {
        ++rep.skipped_order;
        continue;
      }
      long coeffs = 0;
      for (auto x : a) coeffs += m - x + 1;
      for (auto q : q_list) {
        Int size = 1;
        for (long c = 0; c < coeffs; ++c) size *= q;
        if (size > Int(std::to_string(per_case_cap))) {
          ++rep.skipped_large;
          continue;
        }
        JetCellCheck c;
        c.face = eps.label;
        c.a = a;
        c.m = m;
        c.q = q;
        c.brute = jet_count(g, a, m, q, budget).by_ac;
        c.predicted = realize(k == 0 ? phi : psi, q, budget);
        const long e = static_cast<long>(n) * m - s - k;
        c.predicted *= Laurent::L(e).evaluate(q);
        c.ok = c.brute == c.predicted;
        rep.cases.push_back(std::move(c));
      }
    }
  }
  return rep;
}

}  // namespace nmz
