#pragma once

#include <map>
#include <optional>
#include <string>

#include "nmz/laurent.hpp"
#include "nmz/poly.hpp"
#include "nmz/types.hpp"

namespace nmz {

/// Where a class lives: over X_0(g) x G_m, over A^{n1} x G_m, or over G_m.
enum class Base { ZeroLocus, AffineBlock, Torus };
std::string to_string(Base b);

enum class AtomKind {
  Unit,      // identity of G_m: one point over each t
  HypTorus,  // {xi in G_m^vars(f) : f(xi) = t} over t
  ZeroTorus  // {xi in G_m^vars(f) : f(xi) = 0} x G_m, projected to the last factor
};
std::string to_string(AtomKind k);

/// Basic class. The defining polynomial is stored in the ambient variable
/// indexing but the class lives on the torus of the variables it involves.
struct Atom {
  AtomKind kind = AtomKind::Unit;
  std::size_t n_vars = 0;
  std::map<Exponent, Rat> poly;
  /// Index set of the stratum this atom came from; cleared by pushforward.
  std::optional<IndexSet> audit;

  static Atom unit() { return {}; }
  static Atom hyp(const SparsePoly& f, std::optional<IndexSet> audit = std::nullopt);
  static Atom zero(const SparsePoly& f, std::optional<IndexSet> audit = std::nullopt);

  SparsePoly polynomial() const;
  IndexSet variables() const;
  std::string str() const;

  friend bool operator<(const Atom& a, const Atom& b);
  friend bool operator==(const Atom& a, const Atom& b) { return !(a < b) && !(b < a); }
};

/// Z[L, L^-1]-linear combination of atoms over a fixed base.
class MotClass {
 public:
  MotClass() = default;
  explicit MotClass(Base b) : base_(b) {}
  static MotClass of(Base b, const Atom& a, const Laurent& c = Laurent(1));

  std::optional<Base> base() const { return base_; }
  const std::map<Atom, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Atom& a, const Laurent& c);
  MotClass& operator+=(const MotClass& o);
  MotClass& operator-=(const MotClass& o);
  MotClass operator-() const;
  friend MotClass operator+(MotClass a, const MotClass& b) { return a += b; }
  friend MotClass operator-(MotClass a, const MotClass& b) { return a -= b; }
  friend MotClass operator*(MotClass a, const Laurent& c) { return a.scale(c); }
  friend MotClass operator*(const Laurent& c, MotClass a) { return a.scale(c); }
  friend bool operator==(const MotClass& a, const MotClass& b) { return a.terms_ == b.terms_; }

  /// Forget the map to A^{n1}: base becomes G_m and audit tags are dropped.
  MotClass pushforward() const;
  /// Move every atom polynomial into `n_vars` variables starting at `offset`.
  MotClass shift_variables(std::size_t n_vars, std::size_t offset) const;
  MotClass with_base(Base b) const;

  /// One line per atom, deterministic order.
  std::string str() const;

 private:
  MotClass& scale(const Laurent& c);
  void check_base(const MotClass& o);
  std::optional<Base> base_;
  std::map<Atom, Laurent> terms_;
};

/// Class of {xi in G_m^n : f(xi) = t} over t, expressed on the torus of the
/// variables of f: (L-1)^{n - |vars f|} HypTorus(f). Zero-locus variants are
/// dropped when f is a monomial (no torus zeros).
MotClass hypersurface_class(const SparsePoly& f, std::size_t n, Base base, std::optional<IndexSet> audit);
MotClass zero_locus_class(const SparsePoly& f, std::size_t n, Base base, std::optional<IndexSet> audit);

}  // namespace nmz
