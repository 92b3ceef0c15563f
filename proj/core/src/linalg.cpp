#include "nmz/linalg.hpp"

#include <sstream>
#include <utility>

namespace nmz {

namespace {
template <class Seq>
std::string join(const Seq& s) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : s) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}
}  // namespace

std::string to_string(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : s) {
    if (!first) os << ',';
    os << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const Exponent& e) { return join(e); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace nmz

namespace nmz::linalg {

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const Exponent& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Int(static_cast<long>(b[i]));
  return s;
}

IntVec to_int_vec(const Exponent& e) {
  IntVec v;
  v.reserve(e.size());
  for (auto x : e) v.emplace_back(static_cast<long>(x));
  return v;
}

void make_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rat inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  RatMatrix m;
  for (const auto& r : rows) {
    std::vector<Rat> q;
    for (const auto& x : r) q.emplace_back(x);
    m.push_back(std::move(q));
  }
  return rref(m, rows.front().size()).size();
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t ncols) {
  std::vector<IntVec> a = rows;
  // u holds the accumulated unimodular column transform, stored by columns.
  std::vector<IntVec> u(ncols, IntVec(ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (auto& r : a) r[dst] -= f * r[src];
    for (std::size_t k = 0; k < ncols; ++k) u[dst][k] -= f * u[src][k];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    std::swap(u[i], u[j]);
  };

  std::size_t p = 0;
  for (std::size_t r = 0; r < a.size() && p < ncols; ++r) {
    while (true) {
      std::size_t best = ncols;
      for (std::size_t j = p; j < ncols; ++j) {
        if (a[r][j] == 0) continue;
        if (best == ncols || abs(a[r][j]) < abs(a[r][best])) best = j;
      }
      if (best == ncols) break;
      col_swap(p, best);
      bool done = true;
      for (std::size_t j = p + 1; j < ncols; ++j) {
        if (a[r][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][p].get_mpz_t());
        col_axpy(j, p, q);
        if (a[r][j] != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  std::vector<IntVec> kernel;
  for (std::size_t j = p; j < ncols; ++j) kernel.push_back(u[j]);
  return kernel;
}

std::vector<IntVec> saturated_basis(const std::vector<IntVec>& vectors, std::size_t dim) {
  auto orth = integer_kernel(vectors, dim);
  return integer_kernel(orth, dim);
}

std::optional<std::vector<Rat>> coordinates(const std::vector<IntVec>& basis, const IntVec& v) {
  const std::size_t k = basis.size();
  const std::size_t d = v.size();
  RatMatrix m(d, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  auto piv = rref(m, k + 1);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  if (piv.size() != k) throw DomainError("coordinates: basis is not linearly independent");
  std::vector<Rat> c(k);
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = m[r][k];
  return c;
}

std::optional<std::vector<Rat>> solve(const std::vector<IntVec>& rows, const std::vector<Rat>& rhs,
                                      std::size_t ncols) {
  RatMatrix m;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Rat> q;
    for (const auto& x : rows[r]) q.emplace_back(x);
    q.push_back(rhs[r]);
    m.push_back(std::move(q));
  }
  auto piv = rref(m, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  std::vector<Rat> x(ncols, Rat(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][ncols];
  return x;
}

IntVec primitive_integer_multiple(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.get_num() * (l / x.get_den()));
  make_primitive(r);
  return r;
}

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RatMatrix inverse(RatMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rat(0));
    m[i][n + i] = 1;
  }
  auto piv = rref(m, n);
  if (piv.size() != n) throw DomainError("inverse: singular matrix");
  RatMatrix inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace nmz::linalg
