#pragma once

#include <cstdint>
#include <vector>

#include "nmz/types.hpp"

namespace nmz {

/// Subset of the extreme rays of a cone, as a bitmask (at most 64 rays).
using RaySet = std::uint64_t;

/// A cone in R^dim cut out by linear equalities, weak and strict inequalities.
/// Strict inequalities make the cone non-closed; the origin then lies outside.
struct HalfSpaces {
  std::size_t dim = 0;
  std::vector<IntVec> eqs;      // <e, x> = 0
  std::vector<IntVec> weak;     // <w, x> >= 0
  std::vector<IntVec> strict;   // <s, x> > 0
};

struct ConeFace {
  RaySet rays = 0;
  std::size_t dim = 0;
};

/// Rational polyhedral cone with its face lattice. The closure must be pointed.
/// Everything is computed once in the constructor; afterwards the object is
/// immutable and safe to share between threads.
class RationalCone {
 public:
  explicit RationalCone(HalfSpaces h);

  /// Closed cone generated by `gens` (zero vectors ignored).
  static RationalCone closed_hull(const std::vector<IntVec>& gens, std::size_t dim);
  /// Relative interior of the cone generated by `gens`.
  static RationalCone open_hull(const std::vector<IntVec>& gens, std::size_t dim);

  const HalfSpaces& constraints() const { return h_; }
  std::size_t ambient_dim() const { return h_.dim; }
  /// Primitive extreme rays of the closure.
  const std::vector<IntVec>& rays() const { return rays_; }
  /// Dimension of the closure.
  std::size_t dimension() const { return dim_; }
  /// All faces of the closure, including {0} (rays == 0) and the cone itself.
  const std::vector<ConeFace>& faces() const { return faces_; }
  /// Faces F != {0} of the closure whose relative interior lies in the cone.
  /// These partition the cone minus the origin.
  const std::vector<ConeFace>& open_faces() const { return open_faces_; }

  bool contains(const IntVec& x) const;
  bool is_empty() const { return open_faces_.empty(); }
  /// Sum of (-1)^dim over open faces: the T -> infinity limit of the cone's
  /// generating series with all exponents positive.
  long euler_limit() const;

  RationalCone closure() const;
  /// Rays of the closure selected by `s`.
  std::vector<IntVec> rays_of(RaySet s) const;
  /// Smallest face of the closure containing the rays in `s`.
  RaySet face_hull(RaySet s) const;

 private:
  HalfSpaces h_;
  std::vector<IntVec> rays_;
  std::size_t dim_ = 0;
  std::vector<RaySet> tight_;  // per weak ++ strict inequality
  std::vector<ConeFace> faces_;
  std::vector<ConeFace> open_faces_;
};

/// Extreme rays of {x : eqs x = 0, ineqs x >= 0}, primitive and integral.
/// Throws DomainError if the cone contains a line.
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& eqs, const std::vector<IntVec>& ineqs, std::size_t dim);

/// Triangulation of a pointed closed cone by pulling rays in order. Each
/// returned simplex is a set of linearly independent ray indices; the simplices
/// share only common faces and cover the cone.
std::vector<RaySet> triangulate(const RationalCone& cone);

inline int popcount(RaySet s) { return __builtin_popcountll(s); }

}  // namespace nmz
