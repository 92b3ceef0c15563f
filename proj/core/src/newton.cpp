#include "nmz/newton.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nmz/linalg.hpp"

namespace nmz {

using linalg::dot;

namespace {

std::string vertex_label(const std::vector<std::size_t>& vs) {
  std::string s;
  for (auto v : vs) s += "P" + std::to_string(v + 1);
  return s;
}

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

std::optional<std::size_t> NewtonPolyhedron::find_face(const std::vector<std::size_t>& vertices,
                                                        const IndexSet& recession) const {
  auto it = index_.find({vertices, recession});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> NewtonPolyhedron::compact_faces() const {
  std::vector<std::size_t> r;
  for (const auto& f : faces_)
    if (f.compact) r.push_back(f.id);
  return r;
}

bool NewtonPolyhedron::contains(const std::vector<Rat>& b) const {
  for (const auto& f : facets_) {
    Rat s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += Rat(f.normal[i]) * b[i];
    if (s < Rat(f.offset)) return false;
  }
  return true;
}

bool NewtonPolyhedron::on_face(std::size_t face, const Exponent& b) const {
  for (auto fi : faces_.at(face).facets)
    if (dot(facets_[fi].normal, b) != facets_[fi].offset) return false;
  return true;
}

NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>& supp_in, std::size_t n) {
  if (supp_in.empty()) throw DomainError("Newton polyhedron of the zero polynomial");
  std::set<Exponent> supp(supp_in.begin(), supp_in.end());
  for (const auto& e : supp)
    if (e.size() != n) throw DomainError("support point " + to_string(e) + " has wrong length");

  // Homogenize: (b,1) for support points, (e_i,0) for recession directions.
  std::vector<IntVec> gens;
  for (const auto& e : supp) {
    auto g = linalg::to_int_vec(e);
    g.emplace_back(1);
    gens.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVec g(n + 1, 0);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  RationalCone hom = RationalCone::closed_hull(gens, n + 1);

  NewtonPolyhedron P;
  P.n_ = n;
  for (const auto& f : hom.constraints().weak) {
    IntVec w(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    if (linalg::is_zero(w)) continue;  // the face at infinity
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    for (auto& x : w) x /= g;
    Int off = -f[n];
    if (off % g != 0) throw ConsistencyError("facet offset not divisible by normal content");
    P.facets_.push_back({std::move(w), off / g});
  }
  std::sort(P.facets_.begin(), P.facets_.end(),
            [](const Facet& a, const Facet& b) { return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset); });

  // Map homogeneous rays back: height-1 rays are vertices, height-0 rays are e_i.
  const auto& rays = hom.rays();
  std::vector<std::pair<Exponent, std::size_t>> vert_rays;
  std::vector<long> axis_of(rays.size(), -1);
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (rays[r][n] == 0) {
      for (std::size_t i = 0; i < n; ++i)
        if (rays[r][i] != 0) axis_of[r] = static_cast<long>(i);
    } else {
      Exponent v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = rays[r][i].get_si();
      vert_rays.emplace_back(std::move(v), r);
    }
  }
  std::sort(vert_rays.begin(), vert_rays.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<long> vertex_of(rays.size(), -1);
  for (std::size_t k = 0; k < vert_rays.size(); ++k) {
    P.vertices_.push_back(vert_rays[k].first);
    vertex_of[vert_rays[k].second] = static_cast<long>(k);
  }

  for (const auto& cf : hom.faces()) {
    Face f;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (!(cf.rays & (RaySet{1} << r))) continue;
      if (vertex_of[r] >= 0)
        f.vertices.push_back(static_cast<std::size_t>(vertex_of[r]));
      else
        f.recession.push_back(static_cast<std::size_t>(axis_of[r]));
    }
    if (f.vertices.empty()) continue;  // faces at infinity
    std::sort(f.vertices.begin(), f.vertices.end());
    std::sort(f.recession.begin(), f.recession.end());
    f.dim = cf.dim - 1;
    f.compact = f.recession.empty();
    f.whole = f.dim == n;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::binary_search(f.recession.begin(), f.recession.end(), i)) continue;
      bool zero = std::all_of(f.vertices.begin(), f.vertices.end(), [&](auto v) { return P.vertices_[v][i] == 0; });
      if (zero) f.coordinate_planes.push_back(i);
    }
    for (std::size_t fi = 0; fi < P.facets_.size(); ++fi) {
      const auto& fc = P.facets_[fi];
      bool tight = std::all_of(f.vertices.begin(), f.vertices.end(),
                               [&](auto v) { return dot(fc.normal, P.vertices_[v]) == fc.offset; }) &&
                   std::all_of(f.recession.begin(), f.recession.end(), [&](auto i) { return fc.normal[i] == 0; });
      if (tight) f.facets.push_back(fi);
    }
    f.label = f.whole ? std::string("Gamma") : vertex_label(f.vertices);
    if (!f.whole && !f.compact) f.label += "+R" + to_string(f.recession);
    P.faces_.push_back(std::move(f));
  }
  std::sort(P.faces_.begin(), P.faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices, a.recession) < std::tie(b.dim, b.vertices, b.recession);
  });
  for (std::size_t i = 0; i < P.faces_.size(); ++i) {
    P.faces_[i].id = i;
    P.index_[{P.faces_[i].vertices, P.faces_[i].recession}] = i;
  }
  if (P.faces_.empty() || !P.faces_.back().whole) throw ConsistencyError("polyhedron face lattice lacks the top face");
  return P;
}

Support l_gamma(const NewtonPolyhedron& P, const IntVec& a) {
  if (a.size() != P.n()) throw DomainError("weight vector has wrong length");
  for (const auto& x : a)
    if (x < 0) throw DomainError("weight vector " + to_string(a) + " has a negative entry");
  if (linalg::is_zero(a)) return {Int(0), P.whole().id};
  std::optional<Int> best;
  std::vector<std::size_t> arg;
  for (std::size_t v = 0; v < P.vertices().size(); ++v) {
    Int s = dot(a, P.vertices()[v]);
    if (!best || s < *best) {
      best = s;
      arg.clear();
    }
    if (s == *best) arg.push_back(v);
  }
  IndexSet zeros;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0) zeros.push_back(i);
  auto f = P.find_face(arg, zeros);
  if (!f) throw ConsistencyError("no face with vertices " + vertex_label(arg) + " and recession " + to_string(zeros));
  return {*best, *f};
}

RationalCone sigma(const NewtonPolyhedron& P, std::size_t face) {
  const Face& f = P.face(face);
  if (f.whole) throw DomainError("normal cone requested for the whole polyhedron");
  const std::size_t n = P.n();
  HalfSpaces h;
  h.dim = n;
  const auto& v0 = P.vertices()[f.vertices.front()];
  auto diff = [&](const Exponent& u) {
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<long>(u[i] - v0[i]);
    return d;
  };
  for (std::size_t v = 0; v < P.vertices().size(); ++v) {
    if (v == f.vertices.front()) continue;
    bool in = std::binary_search(f.vertices.begin(), f.vertices.end(), v);
    (in ? h.eqs : h.strict).push_back(diff(P.vertices()[v]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    bool in = std::binary_search(f.recession.begin(), f.recession.end(), i);
    (in ? h.eqs : h.strict).push_back(std::move(e));
  }
  return RationalCone(std::move(h));
}

SparsePoly face_poly(const SparsePoly& p, const NewtonPolyhedron& P, std::size_t face) {
  if (p.n_vars() != P.n()) throw DomainError("face_poly: polynomial and polyhedron dimensions differ");
  SparsePoly r(p.n_vars(), p.partition());
  for (const auto& [e, c] : p.terms())
    if (P.on_face(face, e)) r.add_term(e, c);
  if (r.is_zero()) throw DomainError("face " + P.face(face).label + " does not belong to this polynomial");
  return r;
}

std::vector<IndexSet> leant_faces(const NewtonPolyhedron& P, std::size_t compact_face) {
  const Face& g = P.face(compact_face);
  if (!g.compact) throw DomainError("leant faces requested for non-compact face " + g.label);
  std::vector<IndexSet> out;
  for (const auto& f : P.faces())
    if (!f.whole && f.vertices == g.vertices) out.push_back(f.recession);
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
  });
  return out;
}

std::vector<IndexSet> maximal_leant_sets(const NewtonPolyhedron& P, std::size_t compact_face, std::size_t n1) {
  std::vector<IndexSet> in_block;
  for (auto& I : leant_faces(P, compact_face))
    if (I.empty() || I.back() < n1) in_block.push_back(I);
  std::vector<IndexSet> out;
  for (const auto& I : in_block) {
    bool maximal = std::none_of(in_block.begin(), in_block.end(),
                                [&](const IndexSet& J) { return J != I && subset(I, J); });
    if (maximal) out.push_back(I);
  }
  return out;
}

CanonicalPartition canonical_partition(const NewtonPolyhedron& P, std::size_t n1) {
  if (n1 > P.n()) throw DomainError("first block larger than the dimension");
  CanonicalPartition part;
  for (const auto& f : P.faces()) {
    if (f.whole) continue;
    if (!f.recession.empty() && f.recession.back() >= n1) continue;
    auto hull = P.find_face(f.vertices, {});
    if (!hull)
      part.diagnostics.push_back("cell of face " + f.label + ": conv of its vertices is not a face");
    std::string lbl = (hull ? P.face(*hull).label : vertex_label(f.vertices)) + ":" + to_string(f.recession);
    part.cells.push_back({f.id, hull, f.recession, sigma(P, f.id), std::move(lbl)});
  }
  return part;
}

CoverageReport partition_coverage(const CanonicalPartition& part, std::size_t n, std::size_t n1, long bound) {
  CoverageReport rep;
  IntVec a(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      ++rep.points;
      std::size_t hits = 0;
      for (const auto& c : part.cells)
        if (c.cone.contains(a)) ++hits;
      if (hits == 0) ++rep.uncovered;
      if (hits > 1) ++rep.overlapping;
      if (hits != 1 && !rep.witness) rep.witness = a;
      return;
    }
    for (long x = (i < n1 ? 0 : 1); x <= bound; ++x) {
      a[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return rep;
}

PartitionDiff partition_diff(const CanonicalPartition& part, const std::vector<std::string>& expected) {
  PartitionDiff d;
  std::set<std::string> have, want(expected.begin(), expected.end());
  for (const auto& c : part.cells) have.insert(c.label);
  for (const auto& e : want)
    if (!have.count(e)) d.missing.push_back(e);
  for (const auto& h : have)
    if (!want.count(h)) d.extra.push_back(h);
  for (const auto& m : d.missing) {
    auto colon = m.find(':');
    std::string base = m.substr(0, colon);
    std::vector<std::string> same_base;
    for (const auto& c : part.cells)
      if (c.label.substr(0, c.label.find(':')) == base) same_base.push_back(c.label);
    std::string note = "expected cell " + m + " is not the normal cone of any face of the polyhedron";
    if (!same_base.empty()) {
      note += "; computed cells over " + base + ":";
      for (const auto& s : same_base) note += " " + s;
    }
    d.notes.push_back(note);
  }
  return d;
}

bool vertex_positivity(const NewtonPolyhedron& P) {
  for (const auto& v : P.vertices())
    for (auto x : v)
      if (x <= 0) return false;
  return true;
}

FanCheck fan_check(const std::vector<RationalCone>& cones, std::optional<std::size_t> n1) {
  auto key = [](std::vector<IntVec> r) {
    std::sort(r.begin(), r.end());
    return r;
  };
  std::set<std::vector<IntVec>> listed;
  for (const auto& c : cones) listed.insert(key(c.rays()));

  auto is_face_of = [&](const std::vector<IntVec>& rays, const RationalCone& c) {
    if (rays.empty()) return true;
    for (const auto& f : c.faces())
      if (key(c.rays_of(f.rays)) == rays) return true;
    return false;
  };

  // Faces whose relative interior leaves the region need not be listed.
  auto in_region = [&](const std::vector<IntVec>& rays) {
    if (!n1) return true;
    for (std::size_t j = *n1; j < rays.front().size(); ++j) {
      Int s = 0;
      for (const auto& r : rays) s += r[j];
      if (s <= 0) return false;
    }
    return true;
  };

  FanCheck res;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (const auto& f : cones[i].faces()) {
      if (f.rays == 0) continue;
      auto rays = key(cones[i].rays_of(f.rays));
      if (in_region(rays) && !listed.count(rays)) {
        res.ok = false;
        res.witness = {i, i};
        res.reason = "a face of cone " + std::to_string(i) + " is not in the list";
        return res;
      }
    }
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      HalfSpaces h = cones[i].constraints();
      const auto& o = cones[j].constraints();
      h.eqs.insert(h.eqs.end(), o.eqs.begin(), o.eqs.end());
      h.weak.insert(h.weak.end(), o.weak.begin(), o.weak.end());
      h.weak.insert(h.weak.end(), h.strict.begin(), h.strict.end());
      h.weak.insert(h.weak.end(), o.strict.begin(), o.strict.end());
      h.strict.clear();
      auto meet = key(RationalCone(std::move(h)).rays());
      if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j])) {
        res.ok = false;
        res.witness = {i, j};
        res.reason = "cones " + std::to_string(i) + " and " + std::to_string(j) + " meet outside a common face";
        return res;
      }
    }
  }
  return res;
}

}  // namespace nmz
