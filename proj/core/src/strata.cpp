#include "nmz/strata.hpp"

#include <set>

#include "nmz/linalg.hpp"

namespace nmz {

namespace {

MotSeries tensor(const LaurentSeries& s, const MotClass& c) {
  MotSeries r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : s.terms()) r.add_term(k, c * x);
  return r;
}

IntVec unit(std::size_t k, std::size_t i) {
  IntVec e(k, 0);
  e[i] = 1;
  return e;
}

IntVec extend(const IntVec& v, const Int& last) {
  IntVec r = v;
  r.push_back(last);
  return r;
}

}  // namespace

ExactZeta exact_zeta_pullback(const SparsePoly& g, std::size_t n1) {
  require_zeta_hypotheses(g, n1);
  const std::size_t n = g.n_vars();
  const Partition flat{n, 0, 0};
  ExactZeta out;

  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    IndexSet zero, rest;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? zero : rest).push_back(i);
    const std::size_t k = rest.size();
    const long jz = static_cast<long>(zero.size());

    // The polynomial restricted to x_J = 0, in the remaining variables.
    SparsePoly h(k, Partition{k, 0, 0});
    const SparsePoly restricted = set_to_zero(g, zero);
    for (const auto& [e, c] : restricted.terms()) {
      Exponent f(k);
      for (std::size_t r = 0; r < k; ++r) f[r] = e[rest[r]];
      h.add_term(f, c);
    }
    if (h.is_zero()) continue;
    std::size_t k1 = 0;
    while (k1 < k && rest[k1] < n1) ++k1;

    auto lift = [&](const SparsePoly& p) {
      SparsePoly r(n, flat);
      for (const auto& [e, c] : p.terms()) {
        Exponent f(n, 0);
        for (std::size_t j = 0; j < k; ++j) f[rest[j]] = e[j];
        r.add_term(f, c);
      }
      return r;
    };

    NewtonPolyhedron Q = newton_polyhedron(h);
    IntVec ones(k, 1);
    for (const auto& eps : Q.faces()) {
      if (eps.whole) continue;
      if (!eps.recession.empty() && eps.recession.back() >= k1) continue;
      IndexSet leant;
      for (auto i : eps.recession) leant.push_back(rest[i]);
      StratumCell cell;
      cell.zero_coords = zero;
      cell.leant = leant;
      cell.label = to_string(zero) + "|" + eps.label;
      cell.initial_form = lift(face_poly(h, Q, eps.id));
      cell.phi = hypersurface_class(cell.initial_form, k, Base::AffineBlock, leant);
      cell.psi = zero_locus_class(cell.initial_form, k, Base::AffineBlock, leant);

      const IntVec l = linalg::to_int_vec(Q.vertices()[eps.vertices.front()]);
      const HalfSpaces sig = sigma(Q, eps.id).constraints();

      // Orders with ord g = l(a): every coordinate order at most l(a).
      HalfSpaces c0 = sig;
      for (std::size_t i = 0; i < k; ++i) {
        IntVec w = l;
        w[i] -= 1;
        c0.weak.push_back(std::move(w));
      }
      IntVec lp0(k);
      for (std::size_t i = 0; i < k; ++i) lp0[i] = 1 + jz * l[i];
      out.z += tensor(cone_series(RationalCone(std::move(c0)), l, lp0), cell.phi);

      // Orders with ord g = m > l(a), as lattice points (a, m).
      if (!cell.psi.is_zero()) {
        HalfSpaces c1;
        c1.dim = k + 1;
        for (const auto& e : sig.eqs) c1.eqs.push_back(extend(e, 0));
        for (const auto& w : sig.weak) c1.weak.push_back(extend(w, 0));
        for (const auto& s : sig.strict) c1.strict.push_back(extend(s, 0));
        IntVec gap(k + 1);
        for (std::size_t i = 0; i < k; ++i) gap[i] = -l[i];
        gap[k] = 1;
        c1.strict.push_back(gap);
        for (std::size_t i = 0; i < k; ++i) {
          IntVec w(k + 1, 0);
          w[i] = -1;
          w[k] = 1;
          c1.weak.push_back(std::move(w));
        }
        IntVec lt = unit(k + 1, k);
        IntVec lp1(k + 1);
        for (std::size_t i = 0; i < k; ++i) lp1[i] = 1 - l[i];
        lp1[k] = 1 + jz;
        out.z += tensor(cone_series(RationalCone(std::move(c1)), lt, lp1), cell.psi);
      }
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

MotClass exact_milnor_pullback(const ExactZeta& z) {
  return (-z.z.limit()).with_base(Base::AffineBlock);
}

std::vector<ProbeFace> initial_forms(const ExactZeta& z) {
  std::vector<ProbeFace> out;
  std::set<std::map<Exponent, Rat>> seen;
  for (const auto& c : z.cells) {
    if (c.initial_form.size() < 2) continue;
    if (!seen.insert(c.initial_form.terms()).second) continue;
    out.push_back({c.label, c.initial_form});
  }
  return out;
}

}  // namespace nmz
