#include "nmz/zeta.hpp"

#include <algorithm>

#include "nmz/linalg.hpp"

namespace nmz {

namespace {

MotSeries tensor(const LaurentSeries& s, const MotClass& c) {
  MotSeries r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : s.terms()) r.add_term(k, c * x);
  return r;
}

}  // namespace

void require_zeta_hypotheses(const SparsePoly& g, std::size_t n1) {
  if (g.is_zero()) throw DomainError("zeta function undefined: the polynomial is zero");
  if (g.has_constant_term()) throw DomainError("g(0) != 0: the polynomial has a constant term");
  if (n1 > g.n_vars()) throw DomainError("first block larger than the number of variables");
  for (const auto& [e, c] : g.terms()) {
    bool outside = false;
    for (std::size_t i = n1; i < e.size(); ++i) outside = outside || e[i] > 0;
    if (!outside)
      throw DomainError("zero locus does not contain A^n1 x {0}: monomial " + to_string(e) +
                        " involves only first-block variables");
  }
}

ZetaPullback zeta_pullback(const SparsePoly& g, std::size_t n1) {
  require_zeta_hypotheses(g, n1);
  const std::size_t n = g.n_vars();
  ZetaPullback z;
  z.polyhedron = newton_polyhedron(g);
  const auto& P = z.polyhedron;
  auto part = canonical_partition(P, n1);
  z.diagnostics = part.diagnostics;
  IntVec ones(n, 1);

  for (auto& cell : part.cells) {
    if (!cell.compact_face) throw DomainError("canonical partition failure: " + cell.label);
    ZetaCell zc{cell.face, *cell.compact_face, cell.leant, false, cell.cone, {}, cell.label, {}, {}, {}};
    const Face& gamma = P.face(zc.compact);
    const IndexSet& planes = gamma.coordinate_planes;
    zc.kept = std::includes(zc.leant.begin(), zc.leant.end(), planes.begin(), planes.end());
    zc.l_form = linalg::to_int_vec(P.vertices()[gamma.vertices.front()]);

    HalfSpaces h = cell.cone.constraints();
    for (auto j : planes) {
      if (std::binary_search(zc.leant.begin(), zc.leant.end(), j)) continue;
      IntVec w = zc.l_form;
      w[j] -= 1;
      h.weak.push_back(std::move(w));
    }
    zc.cone = RationalCone(std::move(h));

    SparsePoly g_gamma = face_poly(g, P, zc.compact);
    zc.phi = hypersurface_class(g_gamma, n, Base::AffineBlock, zc.leant);
    zc.psi = zero_locus_class(g_gamma, n, Base::AffineBlock, zc.leant);

    LaurentSeries s = cone_series(zc.cone, zc.l_form, ones);
    zc.limit = s.limit();
    z.z0 += tensor(s, zc.phi);
    z.z1 += tensor(s, zc.psi).mul_geometric(-1, 1);
    z.cells.push_back(std::move(zc));
  }
  return z;
}

MilnorResult milnor_pullback(const SparsePoly& g, std::size_t n1) {
  MilnorResult r;
  r.zeta = zeta_pullback(g, n1);
  const auto& P = r.zeta.polyhedron;
  const long n = static_cast<long>(g.n_vars());
  r.closed_form = MotClass(Base::AffineBlock);
  for (const auto& c : r.zeta.cells) {
    if (!c.kept) continue;
    const long dim = static_cast<long>(P.face(c.face).dim);
    const long sign = ((n + 1 - dim) % 2 == 0) ? 1 : -1;
    MotClass term = (c.phi - c.psi) * Laurent(sign);
    r.contributions.push_back({c.label, sign, term});
    r.closed_form += term;
  }
  r.from_limit = -(r.zeta.z0 + r.zeta.z1).limit();
  r.from_limit = r.from_limit.with_base(Base::AffineBlock);
  r.consistent = r.closed_form == r.from_limit;
  if (!r.consistent)
    throw ConsistencyError("face formula " + r.closed_form.str() + " differs from -lim(Z0+Z1) = " +
                           r.from_limit.str());
  return r;
}

MilnorResult milnor_at_origin(const SparsePoly& g) {
  MilnorResult r = milnor_pullback(g, 0);
  r.closed_form = r.closed_form.pushforward();
  r.from_limit = r.from_limit.pushforward();
  for (auto& c : r.contributions) c.term = c.term.pushforward();
  return r;
}

}  // namespace nmz
