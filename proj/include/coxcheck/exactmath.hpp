#pragma once

// Exact integer and rational linear algebra.
//
// Everything in coxcheck is computed over Z or Q with GMP-backed values;
// there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcheck {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact values.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(std::size_t cols, std::span<const std::vector<T>> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(std::size_t rows, std::span<const std::vector<T>> cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<std::vector<T>> row_list() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  std::vector<std::vector<T>> column_list() const {
    std::vector<std::vector<T>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix made of the listed columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) s(i, k) = (*this)(i, idx[k]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(std::span<const Integer> v);

Integer gcd(std::span<const Integer> v);
/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
IntVector primitive(std::span<const Rational> v);
bool is_primitive(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// ---------------------------------------------------------------------------
// Rational linear algebra (fraction-free details are not worth it at this scale).

std::size_t rank(const RatMatrix& a);
Rational determinant(const RatMatrix& a);
/// Some solution of a x = b, or nullopt if inconsistent. Free variables are set to 0.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);
/// Basis of {x : a x = 0} in reduced-echelon parametrisation.
std::vector<RatVector> nullspace(const RatMatrix& a);

// ---------------------------------------------------------------------------
// Integer lattices.

struct HermiteForm {
  IntMatrix h;  ///< echelon form, h = u * a
  IntMatrix u;  ///< unimodular row transformation
};

/// Row-style Hermite normal form: h = u * a with u unimodular, h in row echelon
/// form, pivots positive, entries above each pivot reduced into [0, pivot).
/// Columns are processed left to right; within a column the lowest remaining
/// nonzero entry is folded upward, so the result is deterministic.
HermiteForm hermite_normal_form(const IntMatrix& a);

/// A Z-basis of a sublattice of Z^n; basis vectors are linearly independent.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  /// Throws std::invalid_argument unless the vectors are independent over Q.
  LatticeBasis(std::size_t ambient_rank, std::vector<IntVector> basis);

  /// Basis (in Hermite form) of the lattice generated by arbitrary vectors.
  static LatticeBasis from_generators(std::size_t ambient_rank,
                                      std::span<const IntVector> generators);
  static LatticeBasis full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& vectors() const { return basis_; }

  /// Integer coordinates of v in this basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }
  /// Lattice equality by mutual basis membership.
  bool same_lattice(const LatticeBasis& other) const;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
  // Hermite form of basis_ and its transform, cached for membership tests.
  IntMatrix echelon_;
  IntMatrix transform_;
  std::vector<std::size_t> pivots_;
};

/// Saturated basis of {x in Z^cols : a x = 0}.
LatticeBasis integer_kernel(const IntMatrix& a);

LatticeBasis lattice_intersection(const LatticeBasis& a, const LatticeBasis& b);

/// Index [Z^n : span(b)]; nullopt stands for an infinite index (rank deficit).
std::optional<Integer> lattice_index(const LatticeBasis& b);

/// max{k > 0 : v/k in span(b)}. Throws std::domain_error if v = 0 or v is not
/// in the lattice.
Integer divisibility_index(const LatticeBasis& b, std::span<const Integer> v);

}  // namespace coxcheck
