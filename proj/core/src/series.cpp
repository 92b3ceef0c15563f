#include "nmz/series.hpp"

#include <set>
#include <sstream>

#include "nmz/linalg.hpp"

namespace nmz {

namespace {

using linalg::dot;

struct Stellar {
  std::size_t cap;
  std::vector<UnimodularCell> out;

  // relint(cone(gens)), gens linearly independent and primitive.
  void split(std::vector<IntVec> gens) {
    if (out.size() >= cap) throw BudgetExceeded("unimodular decomposition exceeded " + std::to_string(cap) + " cells");
    const std::size_t n = gens.front().size();
    const std::size_t k = gens.size();
    auto basis = linalg::saturated_basis(gens, n);
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    for (std::size_t j = 0; j < k; ++j) {
      auto c = linalg::coordinates(basis, gens[j]);
      for (std::size_t i = 0; i < k; ++i) a[j][i] = (*c)[i];
    }
    if (abs(linalg::determinant(a)) == 1) {
      out.push_back({std::move(gens)});
      return;
    }
    // A lattice basis vector outside the sublattice spanned by gens has a
    // nonzero fractional part; that fractional part is a lattice point in the
    // half-open parallelepiped.
    std::vector<Rat> best;
    Rat best_sum = -1;
    for (const auto& b : basis) {
      auto lam = *linalg::coordinates(gens, b);
      Rat s = 0;
      for (auto& x : lam) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        x -= fl;
        s += x;
      }
      if (s > 0 && (best_sum < 0 || s < best_sum)) {
        best = lam;
        best_sum = s;
      }
    }
    if (best.empty()) throw ConsistencyError("non-unimodular cone without interior lattice point");
    IntVec w(n, 0);
    std::vector<Rat> wr(n, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) wr[i] += best[j] * Rat(gens[j][i]);
    w = linalg::primitive_integer_multiple(wr);

    std::vector<std::size_t> support, rest;
    for (std::size_t j = 0; j < k; ++j) (best[j] > 0 ? support : rest).push_back(j);
    const std::size_t full = (std::size_t{1} << support.size()) - 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
      std::vector<IntVec> g;
      for (auto j : rest) g.push_back(gens[j]);
      for (std::size_t t = 0; t < support.size(); ++t)
        if (mask & (std::size_t{1} << t)) g.push_back(gens[support[t]]);
      g.push_back(w);
      split(std::move(g));
    }
  }
};

}  // namespace

std::vector<UnimodularCell> decompose_open(const RationalCone& cone, std::size_t cap) {
  Stellar st{cap, {}};
  const std::size_t n = cone.ambient_dim();
  for (const auto& face : cone.open_faces()) {
    auto rays = cone.rays_of(face.rays);
    RationalCone fc = RationalCone::closed_hull(rays, n);
    RaySet all = 0;
    for (const auto& f : fc.faces()) all |= f.rays;
    std::set<RaySet> pieces;
    for (auto simplex : triangulate(fc)) {
      // Every nonempty sub-simplex whose carrier face is the whole face.
      for (RaySet sub = simplex; sub; sub = (sub - 1) & simplex)
        if (fc.face_hull(sub) == all) pieces.insert(sub);
    }
    for (auto p : pieces) st.split(fc.rays_of(p));
  }
  return std::move(st.out);
}

LaurentSeries cone_series_unchecked_weight(const RationalCone& cone, const IntVec& l, const IntVec& lp) {
  if (!cone.is_empty())
    for (const auto& r : cone.rays())
      if (dot(l, r) <= 0)
        throw DomainError("T-exponent form " + to_string(l) + " is not positive on ray " + to_string(r));
  LaurentSeries s;
  for (const auto& cell : decompose_open(cone)) {
    FactorKey key;
    for (const auto& g : cell.gens) key.emplace_back(-dot(lp, g).get_si(), dot(l, g).get_si());
    s.add_term(std::move(key), Laurent(1));
  }
  return s;
}

LaurentSeries cone_series(const RationalCone& cone, const IntVec& l, const IntVec& lp) {
  if (!cone.is_empty())
    for (const auto& r : cone.rays())
      if (dot(lp, r) <= 0)
        throw DomainError("weight form " + to_string(lp) + " is not positive on ray " + to_string(r));
  return cone_series_unchecked_weight(cone, l, lp);
}

long open_cone_limit(const RationalCone& cone, const IntVec& l, const IntVec& lp) {
  Laurent lim = cone_series(cone, l, lp).limit();
  long expected = cone.euler_limit();
  if (lim != Laurent(expected))
    throw ConsistencyError("cone series limit " + lim.str() + " differs from face count " + std::to_string(expected));
  bool relatively_open = cone.open_faces().size() == 1 && cone.open_faces().front().dim == cone.dimension();
  if (relatively_open && expected != (cone.dimension() % 2 ? -1 : 1))
    throw ConsistencyError("relatively open cone limit is not (-1)^dim");
  return expected;
}

std::string to_string(const FactorKey& k) {
  if (k.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) os << '*';
    os << "p(" << k[i].first << ',' << k[i].second << ')';
  }
  return os.str();
}

}  // namespace nmz
