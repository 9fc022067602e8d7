#include "coxcheck/exactmath.hpp"

#include <algorithm>
#include <utility>

namespace coxcheck {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Integer gcd(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.get_num() * (den / x.get_den()));
  Integer g = gcd(out);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  for (auto& x : out) x /= g;
  return out;
}

bool is_primitive(std::span<const Integer> v) { return gcd(v) == 1; }

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& a) {
  RatMatrix w = a;
  return rref(w, w.cols()).size();
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  RatMatrix w = a;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      Rational f = w(i, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (aug(i, a.cols()) != 0) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  RatMatrix w = a;
  auto pivots = rref(w, w.cols());
  std::vector<bool> is_pivot(w.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < w.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(w.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -w(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------

namespace {

void row_combine(IntMatrix& m, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                 const Integer& p, const Integer& q) {
  // (row r, row i) <- (s*row r + t*row i, p*row r + q*row i)
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer a = m(r, j), b = m(i, j);
    m(r, j) = s * a + t * b;
    m(i, j) = p * a + q * b;
  }
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = h.rows(); i-- > r + 1;) {
      if (h(i, c) == 0) continue;
      Integer x = h(r, c), y = h(i, c), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Integer p = -y / g, q = x / g;
      row_combine(h, r, i, s, t, p, q);
      row_combine(u, r, i, s, t, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h(k, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (f == 0) continue;
      row_axpy(h, k, r, f);
      row_axpy(u, k, r, f);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

LatticeBasis::LatticeBasis(std::size_t ambient_rank, std::vector<IntVector> basis)
    : ambient_rank_(ambient_rank), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_rank_) throw std::invalid_argument("lattice basis: wrong vector length");
  IntMatrix b = IntMatrix::from_rows(ambient_rank_, basis_);
  if (coxcheck::rank(to_rational(b)) != basis_.size())
    throw std::invalid_argument("lattice basis: vectors are linearly dependent");
  auto hf = hermite_normal_form(b);
  echelon_ = std::move(hf.h);
  transform_ = std::move(hf.u);
  for (std::size_t i = 0; i < echelon_.rows(); ++i) {
    std::size_t c = 0;
    while (echelon_(i, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

LatticeBasis LatticeBasis::from_generators(std::size_t ambient_rank,
                                           std::span<const IntVector> generators) {
  if (generators.empty()) return LatticeBasis(ambient_rank, {});
  auto hf = hermite_normal_form(IntMatrix::from_rows(ambient_rank, generators));
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    IntVector row = hf.h.row(i);
    if (is_zero(row)) break;
    rows.push_back(std::move(row));
  }
  return LatticeBasis(ambient_rank, std::move(rows));
}

LatticeBasis LatticeBasis::full(std::size_t ambient_rank) {
  return LatticeBasis(ambient_rank, IntMatrix::identity(ambient_rank).row_list());
}

std::optional<IntVector> LatticeBasis::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("coordinates: wrong vector length");
  IntVector residual(v.begin(), v.end());
  IntVector y(basis_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Integer& piv = echelon_(i, pivots_[i]);
    if (!mpz_divisible_p(residual[pivots_[i]].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
    y[i] = residual[pivots_[i]] / piv;
    for (std::size_t j = 0; j < ambient_rank_; ++j) residual[j] -= y[i] * echelon_(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  // v = y * echelon = y * transform * basis
  IntVector x(basis_.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[i] * transform_(i, k);
  return x;
}

bool LatticeBasis::same_lattice(const LatticeBasis& other) const {
  if (ambient_rank_ != other.ambient_rank_) return false;
  for (const auto& v : basis_)
    if (!other.contains(v)) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

LatticeBasis integer_kernel(const IntMatrix& a) {
  auto hf = hermite_normal_form(a.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < hf.h.rows(); ++i)
    if (is_zero(hf.h.row(i))) kernel.push_back(hf.u.row(i));
  return LatticeBasis::from_generators(a.cols(), kernel);
}

LatticeBasis lattice_intersection(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("lattice_intersection: ambient ranks differ");
  const std::size_t n = a.ambient_rank(), ka = a.rank(), kb = b.rank();
  IntMatrix m(n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = a.vectors()[i][j];
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, ka + i) = -b.vectors()[i][j];
  std::vector<IntVector> gens;
  const LatticeBasis kernel = integer_kernel(m);
  for (const auto& k : kernel.vectors()) {
    IntVector w(n);
    for (std::size_t i = 0; i < ka; ++i)
      for (std::size_t j = 0; j < n; ++j) w[j] += k[i] * a.vectors()[i][j];
    gens.push_back(std::move(w));
  }
  return LatticeBasis::from_generators(n, gens);
}

std::optional<Integer> lattice_index(const LatticeBasis& b) {
  if (b.rank() < b.ambient_rank()) return std::nullopt;
  if (b.rank() == 0) return Integer(1);
  Rational det = determinant(to_rational(IntMatrix::from_rows(b.ambient_rank(), b.vectors())));
  return Integer(abs(det.get_num()));
}

Integer divisibility_index(const LatticeBasis& b, std::span<const Integer> v) {
  if (is_zero(v)) throw std::domain_error("divisibility_index: zero vector");
  auto coords = b.coordinates(v);
  if (!coords) throw std::domain_error("divisibility_index: vector is not in the lattice");
  return gcd(*coords);
}

}  // namespace coxcheck
