#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nmz/cone.hpp"
#include "nmz/poly.hpp"
#include "nmz/types.hpp"

namespace nmz {

/// Facet inequality <normal, b> >= offset; normal primitive and nonnegative.
struct Facet {
  IntVec normal;
  Int offset;
};

/// A nonempty face of a Newton polyhedron: conv(vertices) + cone(e_i : i in recession).
struct Face {
  std::size_t id = 0;
  std::vector<std::size_t> vertices;  // indices into NewtonPolyhedron::vertices()
  IndexSet recession;
  std::size_t dim = 0;
  bool compact = false;
  bool whole = false;  // the polyhedron itself
  /// Coordinates i outside `recession` with every vertex on {x_i = 0}.
  IndexSet coordinate_planes;
  std::vector<std::size_t> facets;  // facets containing the face
  std::string label;                // e.g. "P1P2" or "P1P2+R{1,2}"
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron() = default;
  std::size_t n() const { return n_; }
  /// Vertices in descending lexicographic order; labelled P1, P2, ...
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// All nonempty faces ordered by dimension, the whole polyhedron last.
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t id) const { return faces_.at(id); }
  const Face& whole() const { return faces_.back(); }
  std::optional<std::size_t> find_face(const std::vector<std::size_t>& vertices, const IndexSet& recession) const;
  std::vector<std::size_t> compact_faces() const;

  bool contains(const std::vector<Rat>& b) const;
  /// True if b lies on every facet incident to the face.
  bool on_face(std::size_t face, const Exponent& b) const;

 private:
  friend NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>&, std::size_t);
  std::size_t n_ = 0;
  std::vector<Exponent> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::map<std::pair<std::vector<std::size_t>, IndexSet>, std::size_t> index_;
};

/// Convex hull of supp + R^n_{>=0}. Throws DomainError on empty support.
NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>& supp, std::size_t n);
inline NewtonPolyhedron newton_polyhedron(const SparsePoly& p) { return newton_polyhedron(support(p), p.n_vars()); }

struct Support {
  Int value;
  std::size_t face;
};
/// min over the polyhedron of <a, .> and the face where it is attained
/// (the whole polyhedron for a = 0). Throws DomainError for negative entries.
Support l_gamma(const NewtonPolyhedron& P, const IntVec& a);

/// Relatively open normal cone {a : face_a = face}. Throws for the whole polyhedron.
RationalCone sigma(const NewtonPolyhedron& P, std::size_t face);

/// Terms of p whose exponents lie on the face.
SparsePoly face_poly(const SparsePoly& p, const NewtonPolyhedron& P, std::size_t face);

/// Index sets I with conv(vertices of the compact face) + R^I_{>=0} a face.
std::vector<IndexSet> leant_faces(const NewtonPolyhedron& P, std::size_t compact_face);
/// Maximal leant sets contained in {0..n1-1}.
std::vector<IndexSet> maximal_leant_sets(const NewtonPolyhedron& P, std::size_t compact_face, std::size_t n1);

struct PartitionCell {
  std::size_t face;                          // face whose normal cone is the cell
  std::optional<std::size_t> compact_face;   // hull of its vertices, when that is a face
  IndexSet leant;                            // recession set of `face`
  RationalCone cone;
  std::string label;  // "<compact label>:<leant set>", e.g. "P1P2:{1,2}"
};

struct CanonicalPartition {
  std::vector<PartitionCell> cells;
  std::vector<std::string> diagnostics;
};

/// Cells sigma(face) covering R^{n1}_{>=0} x R^{n-n1}_{>0}.
CanonicalPartition canonical_partition(const NewtonPolyhedron& P, std::size_t n1);

struct CoverageReport {
  std::size_t points = 0;
  std::size_t uncovered = 0;
  std::size_t overlapping = 0;
  std::optional<IntVec> witness;
  bool ok() const { return uncovered == 0 && overlapping == 0; }
};
/// Lattice points with coordinates in [0, bound] (strictly positive outside the
/// first n1 coordinates) tested against each cell's own constraints.
CoverageReport partition_coverage(const CanonicalPartition& part, std::size_t n, std::size_t n1, long bound);

/// Labels of expected cells missing from / extra in the computed partition.
struct PartitionDiff {
  std::vector<std::string> missing;  // expected but not computed
  std::vector<std::string> extra;    // computed but not expected
  std::vector<std::string> notes;
};
PartitionDiff partition_diff(const CanonicalPartition& part, const std::vector<std::string>& expected);

bool vertex_positivity(const NewtonPolyhedron& P);

struct FanCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};
/// Fan axioms for closed cones: faces of listed cones are listed (the zero cone
/// is implicit) and pairwise intersections are common faces. With n1 set, only
/// faces meeting R^{n1}_{>=0} x R^{n-n1}_{>0} must be listed.
FanCheck fan_check(const std::vector<RationalCone>& cones, std::optional<std::size_t> n1 = std::nullopt);

}  // namespace nmz
