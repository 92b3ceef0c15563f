#pragma once

#include <string>
#include <vector>

#include "nmz/motivic.hpp"
#include "nmz/newton.hpp"
#include "nmz/poly.hpp"
#include "nmz/series.hpp"

namespace nmz {

using MotSeries = SrSeries<MotClass>;

/// One summand of the face formula: a compact face, a leant set and the cone
/// of weight vectors whose jets it describes.
struct ZetaCell {
  std::size_t face;     // the face gamma + R^I
  std::size_t compact;  // gamma
  IndexSet leant;       // I
  bool kept = false;    // I contains every coordinate plane containing gamma
  RationalCone cone;    // normal cone cut down to a_j <= l(a) on those planes
  IntVec l_form;        // l(a) = <a, b> for a vertex b of gamma
  std::string label;
  MotClass phi, psi;
  Laurent limit;  // limit of the cone series (an integer)
};

struct ZetaPullback {
  NewtonPolyhedron polyhedron;
  std::vector<ZetaCell> cells;
  MotSeries z0, z1;
  std::vector<std::string> diagnostics;
};

/// Z0 and Z1 of the zeta function pulled back to A^{n1} x G_m, assembled
/// cell by cell from the canonical partition. Requires g(0) = 0, g != 0 and
/// every monomial to involve a variable outside the first block.
ZetaPullback zeta_pullback(const SparsePoly& g, std::size_t n1);

struct MilnorFace {
  std::string label;
  long sign;
  MotClass term;
};

struct MilnorResult {
  MotClass closed_form;   // alternating sum over compact faces and kept leant sets
  MotClass from_limit;    // -lim (Z0 + Z1)
  bool consistent = false;
  std::vector<MilnorFace> contributions;
  ZetaPullback zeta;
};

/// Pulled-back Milnor fiber over A^{n1} x G_m by the face formula, with the
/// series-limit cross-check. Throws ConsistencyError if the two disagree.
MilnorResult milnor_pullback(const SparsePoly& g, std::size_t n1);

/// Milnor fiber at the origin over G_m (first block empty).
MilnorResult milnor_at_origin(const SparsePoly& g);

/// Throws DomainError naming the first violated syntactic hypothesis.
void require_zeta_hypotheses(const SparsePoly& g, std::size_t n1);

}  // namespace nmz
