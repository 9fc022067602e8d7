#pragma once

// Brute-force reference computations for the property and unit tests. They
// share only the number types with the library: no HNF, no simplex, no
// double description, no Groebner bases.

#include "coxcheck/exactmath.hpp"
#include "coxcheck/fans.hpp"
#include "coxcheck/polyhedra.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using namespace coxcheck;

/// Solves A x = b for square A by Gauss-Jordan elimination; nullopt if singular.
inline std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Integer coordinates of v in the span of linearly independent vectors,
/// found by solving a square subsystem and substituting back.
inline bool in_lattice(const std::vector<IntVector>& basis, const IntVector& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
  const std::size_t k = basis.size(), n = v.size();
  for (const auto& rows : subsets(n, k)) {
    std::vector<RatVector> a(k, RatVector(k));
    RatVector b(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][rows[i]];
      b[i] = v[rows[i]];
    }
    auto x = solve_square(a, b);
    if (!x) continue;
    for (const auto& c : *x)
      if (c.get_den() != 1) return false;
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < k; ++j) s += (*x)[j] * basis[j][i];
      if (s != v[i]) return false;
    }
    return true;
  }
  return false;
}

/// Vertices of {y : <n, y> + c >= 0} from every d-subset of tight facets.
inline std::vector<RatVector> vertices_by_subsets(const HPolytope& h) {
  const std::size_t d = h.dimension;
  std::vector<RatVector> out;
  for (const auto& s : subsets(h.halfspaces.size(), d)) {
    std::vector<RatVector> a;
    RatVector b;
    for (auto i : s) {
      a.push_back(h.halfspaces[i].normal);
      b.push_back(-h.halfspaces[i].offset);
    }
    auto y = solve_square(a, b);
    if (!y) continue;
    bool feasible = true;
    for (const auto& hs : h.halfspaces) {
      Rational v = hs.offset;
      for (std::size_t k = 0; k < d; ++k) v += hs.normal[k] * (*y)[k];
      if (v < 0) feasible = false;
    }
    if (feasible && std::find(out.begin(), out.end(), *y) == out.end()) out.push_back(*y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<RatVector> sorted(std::vector<RatVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Monomial ideals: f in rad(I) iff the support of some generator lies in the
/// support of f.
inline bool monomial_radical_contains(const std::vector<unsigned>& f, const std::vector<std::vector<unsigned>>& gens) {
  for (const auto& g : gens) {
    bool inside = true;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0 && f[i] == 0) inside = false;
    if (inside) return true;
  }
  return false;
}

/// Largest k <= limit with l / k in the lattice.
inline long largest_divisor_k(const std::vector<IntVector>& basis, const IntVector& l, long limit) {
  long best = 0;
  for (long k = 1; k <= limit; ++k) {
    IntVector q(l.size());
    bool integral = true;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] % k != 0) integral = false;
      q[i] = l[i] / k;
    }
    if (integral && in_lattice(basis, q)) best = k;
  }
  return best;
}

/// min c.y over {Q y = b, 0 <= y <= 1} by enumerating the vertices of the
/// fiber polytope: all but rank(Q) coordinates sit at a bound.
inline std::optional<Rational> fiber_minimum(const IntMatrix& q, const IntVector& b, const RatVector& c) {
  const std::size_t rho = q.rows(), m = q.cols();
  std::optional<Rational> best;
  for (const auto& free : subsets(m, rho)) {
    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < m; ++i)
      if (!std::binary_search(free.begin(), free.end(), i)) fixed.push_back(i);
    for (unsigned long mask = 0; mask < (1ul << fixed.size()); ++mask) {
      RatVector y(m);
      for (std::size_t k = 0; k < fixed.size(); ++k) y[fixed[k]] = (mask >> k) & 1u;
      std::vector<RatVector> a(rho, RatVector(rho));
      RatVector rhs(rho);
      for (std::size_t i = 0; i < rho; ++i) {
        rhs[i] = b[i];
        for (auto k : fixed) rhs[i] -= q(i, k) * y[k];
        for (std::size_t j = 0; j < rho; ++j) a[i][j] = q(i, free[j]);
      }
      auto x = solve_square(a, rhs);
      if (!x) continue;
      bool ok = true;
      for (std::size_t j = 0; j < rho; ++j) {
        if ((*x)[j] < 0 || (*x)[j] > 1) ok = false;
        y[free[j]] = (*x)[j];
      }
      if (!ok) continue;
      Rational v = 0;
      for (std::size_t i = 0; i < m; ++i) v += c[i] * y[i];
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

/// |det| of the square integer matrix with the given columns.
inline Integer abs_det(const std::vector<IntVector>& cols) {
  std::vector<RatVector> a(cols.size(), RatVector(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = cols[j][i];
  Rational det = 1;
  const std::size_t n = cols.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return abs(det.get_num());
}

}  // namespace oracle
