#pragma once

#include <string>
#include <vector>

#include "nmz/oracles.hpp"
#include "nmz/zeta.hpp"

namespace nmz {

/// Jets split by the set of coordinates that vanish to order > m and by the
/// face of the restricted polynomial exposed by the remaining orders.
struct StratumCell {
  IndexSet zero_coords;  // coordinates identically zero modulo t^{m+1}
  IndexSet leant;        // recession set of the face (original indices)
  std::string label;     // e.g. "{3}|P1P2+R{1}"
  SparsePoly initial_form;
  MotClass phi, psi;
};

struct ExactZeta {
  MotSeries z;
  std::vector<StratumCell> cells;
};

/// Zeta function pulled back to A^{n1} x G_m counting every arc, including
/// those with coordinates of arbitrarily high order. The zero-locus part needs
/// each initial form with torus zeros to be smooth there; see initial_forms().
ExactZeta exact_zeta_pullback(const SparsePoly& g, std::size_t n1);

/// -lim of exact_zeta_pullback, over A^{n1} x G_m.
MotClass exact_milnor_pullback(const ExactZeta& z);

/// Initial forms whose torus zero locus enters the result (for the probe).
std::vector<ProbeFace> initial_forms(const ExactZeta& z);

}  // namespace nmz
