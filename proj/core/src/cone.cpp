#include "nmz/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nmz/linalg.hpp"

namespace nmz {

namespace {

using linalg::dot;

// Dynamic bitset over constraint rows; only subset tests and intersection needed.
struct RowBits {
  std::vector<std::uint64_t> w;
  explicit RowBits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  RowBits operator&(const RowBits& o) const {
    RowBits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  bool subset_of(const RowBits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

struct DDRay {
  IntVec y;
  RowBits zeros;
};

IntVec combine(const IntVec& p, const Int& vp, const IntVec& n, const Int& vn) {
  // vp > 0 > vn; the result is tight on the current row.
  IntVec r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = vp * n[i] - vn * p[i];
  linalg::make_primitive(r);
  return r;
}

// Double description on a pointed cone {y in R^k : rows . y >= 0}, rank(rows) == k.
std::vector<IntVec> dd_pointed(const std::vector<IntVec>& rows, std::size_t k) {
  const std::size_t R = rows.size();
  std::vector<std::size_t> basis_rows;
  std::vector<IntVec> chosen;
  for (std::size_t i = 0; i < R && chosen.size() < k; ++i) {
    chosen.push_back(rows[i]);
    if (linalg::rank(chosen) == chosen.size())
      basis_rows.push_back(i);
    else
      chosen.pop_back();
  }
  if (chosen.size() < k) throw DomainError("cone is not pointed (contains a line)");

  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = chosen[i][j];
  auto inv = linalg::inverse(m);

  std::vector<DDRay> rays;
  std::vector<bool> done(R, false);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = inv[i][j];
    DDRay r{linalg::primitive_integer_multiple(col), RowBits(R)};
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) r.zeros.set(basis_rows[i]);
    rays.push_back(std::move(r));
  }
  for (auto i : basis_rows) done[i] = true;

  for (std::size_t i = 0; i < R; ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DDRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[i], rays[r].y);
      if (val[r] > 0) {
        pos.push_back(r);
        next.push_back(rays[r]);
      } else if (val[r] < 0) {
        neg.push_back(r);
      } else {
        next.push_back(rays[r]);
        next.back().zeros.set(i);
      }
    }
    if (neg.empty()) {
      rays = std::move(next);
      continue;
    }
    for (auto p : pos) {
      for (auto n : neg) {
        RowBits common = rays[p].zeros & rays[n].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && common.subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        DDRay nr{combine(rays[p].y, val[p], rays[n].y, val[n]), common};
        nr.zeros.set(i);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

std::vector<IntVec> identity_basis(std::size_t dim) {
  std::vector<IntVec> b(dim, IntVec(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) b[i][i] = 1;
  return b;
}

IntVec from_coords(const std::vector<IntVec>& basis, const IntVec& y, std::size_t dim) {
  IntVec x(dim, 0);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) x[i] += y[j] * basis[j][i];
  linalg::make_primitive(x);
  return x;
}

}  // namespace

std::vector<IntVec> extreme_rays(const std::vector<IntVec>& eqs, const std::vector<IntVec>& ineqs, std::size_t dim) {
  auto basis = eqs.empty() ? identity_basis(dim) : linalg::integer_kernel(eqs, dim);
  const std::size_t k = basis.size();
  if (k == 0) return {};
  std::vector<IntVec> rows;
  for (const auto& a : ineqs) {
    IntVec r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = dot(a, basis[j]);
    if (!linalg::is_zero(r)) rows.push_back(std::move(r));
  }
  auto ys = dd_pointed(rows, k);
  std::vector<IntVec> out;
  out.reserve(ys.size());
  for (const auto& y : ys) out.push_back(from_coords(basis, y, dim));
  std::sort(out.begin(), out.end());
  return out;
}

RationalCone::RationalCone(HalfSpaces h) : h_(std::move(h)) {
  std::vector<IntVec> ineqs = h_.weak;
  ineqs.insert(ineqs.end(), h_.strict.begin(), h_.strict.end());
  rays_ = extreme_rays(h_.eqs, ineqs, h_.dim);
  if (rays_.size() > 64) throw DomainError("cone has more than 64 extreme rays");
  dim_ = linalg::rank(rays_);

  for (const auto& a : ineqs) {
    RaySet t = 0;
    for (std::size_t r = 0; r < rays_.size(); ++r)
      if (dot(a, rays_[r]) == 0) t |= RaySet{1} << r;
    tight_.push_back(t);
  }

  const RaySet full = rays_.empty() ? 0 : (rays_.size() == 64 ? ~RaySet{0} : (RaySet{1} << rays_.size()) - 1);
  std::set<RaySet> seen{full};
  std::vector<RaySet> queue{full};
  while (!queue.empty()) {
    RaySet f = queue.back();
    queue.pop_back();
    for (auto t : tight_) {
      RaySet g = f & t;
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  for (auto f : seen) faces_.push_back({f, linalg::rank(rays_of(f))});

  const std::size_t nweak = h_.weak.size();
  for (const auto& f : faces_) {
    if (f.rays == 0) continue;
    bool open = true;
    // A strict form is positive on relint F unless it vanishes on all of F.
    for (std::size_t s = 0; s < h_.strict.size() && open; ++s)
      if ((tight_[nweak + s] & f.rays) == f.rays) open = false;
    if (open) open_faces_.push_back(f);
  }
}

RationalCone RationalCone::closed_hull(const std::vector<IntVec>& gens, std::size_t dim) {
  std::vector<IntVec> g;
  for (const auto& v : gens)
    if (!linalg::is_zero(v)) g.push_back(v);
  HalfSpaces h;
  h.dim = dim;
  h.eqs = linalg::integer_kernel(g, dim);
  auto basis = h.eqs.empty() ? identity_basis(dim) : linalg::integer_kernel(h.eqs, dim);
  const std::size_t k = basis.size();
  if (k > 0) {
    std::vector<IntVec> coords;
    for (const auto& v : g) coords.push_back(linalg::primitive_integer_multiple(*linalg::coordinates(basis, v)));
    for (const auto& y : dd_pointed(coords, k)) {
      std::vector<Rat> rhs(y.begin(), y.end());
      h.weak.push_back(linalg::primitive_integer_multiple(*linalg::solve(basis, rhs, dim)));
    }
    std::sort(h.weak.begin(), h.weak.end());
  }
  return RationalCone(std::move(h));
}

RationalCone RationalCone::open_hull(const std::vector<IntVec>& gens, std::size_t dim) {
  HalfSpaces h = closed_hull(gens, dim).h_;
  h.strict = std::move(h.weak);
  h.weak.clear();
  return RationalCone(std::move(h));
}

bool RationalCone::contains(const IntVec& x) const {
  for (const auto& e : h_.eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& w : h_.weak)
    if (dot(w, x) < 0) return false;
  for (const auto& s : h_.strict)
    if (dot(s, x) <= 0) return false;
  return true;
}

long RationalCone::euler_limit() const {
  long s = 0;
  for (const auto& f : open_faces_) s += (f.dim % 2 == 0) ? 1 : -1;
  return s;
}

RationalCone RationalCone::closure() const {
  HalfSpaces h = h_;
  h.weak.insert(h.weak.end(), h.strict.begin(), h.strict.end());
  h.strict.clear();
  return RationalCone(std::move(h));
}

std::vector<IntVec> RationalCone::rays_of(RaySet s) const {
  std::vector<IntVec> r;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (s & (RaySet{1} << i)) r.push_back(rays_[i]);
  return r;
}

RaySet RationalCone::face_hull(RaySet s) const {
  RaySet f = rays_.empty() ? 0 : (rays_.size() == 64 ? ~RaySet{0} : (RaySet{1} << rays_.size()) - 1);
  for (auto t : tight_)
    if ((t & s) == s) f &= t;
  return f;
}

std::vector<RaySet> triangulate(const RationalCone& cone) {
  std::map<RaySet, std::size_t> dims;
  for (const auto& f : cone.faces()) dims[f.rays] = f.dim;
  std::map<RaySet, std::vector<RaySet>> memo;

  auto rec = [&](auto&& self, RaySet f) -> std::vector<RaySet> {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    std::vector<RaySet> out;
    const std::size_t d = dims.at(f);
    if (d == 0) {
      // nothing
    } else if (static_cast<std::size_t>(popcount(f)) == d) {
      out.push_back(f);
    } else {
      const RaySet apex = f & (~f + 1);
      for (const auto& [g, gd] : dims) {
        if (gd + 1 != d || (g & ~f) || (g & apex)) continue;
        for (auto s : self(self, g)) out.push_back(s | apex);
      }
    }
    memo[f] = out;
    return out;
  };
  RaySet full = 0;
  for (const auto& f : cone.faces()) full |= f.rays;
  return rec(rec, full);
}

}  // namespace nmz
