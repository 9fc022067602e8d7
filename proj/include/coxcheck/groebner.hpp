#pragma once

// Multivariate polynomials over Q and Buchberger's algorithm.
//
// Text syntax, used by instance files:
//
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := integer ['/' integer] | 'T' index ['^' integer]
//
// Variables are T1, T2, ... (1-based). Whitespace is ignored. Example:
// "3/2*T1^2*T4 - T2*T3".

#include "coxcheck/exactmath.hpp"

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxcheck {

using Monomial = std::vector<unsigned>;  // exponent vector

struct TermOrder {
  enum class Kind { degrevlex, deglex, lex };
  Kind kind = Kind::degrevlex;
  /// Variables by decreasing priority; empty means T1 > T2 > ... .
  std::vector<std::size_t> priority;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : nvars_(variables) {}
  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(std::size_t variables, Monomial m, const Rational& c = 1);

  std::size_t variables() const { return nvars_; }
  /// Terms sorted by decreasing degrevlex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;

  /// The same polynomial in a ring with more variables.
  Polynomial extend(std::size_t variables) const;
  std::string to_string() const;

 private:
  friend Polynomial make_polynomial(std::size_t variables, std::vector<Term> terms);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Builds a polynomial from unsorted terms, merging equal monomials.
Polynomial make_polynomial(std::size_t variables, std::vector<Term> terms);

struct PolynomialParseError : std::runtime_error {
  PolynomialParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column(column) {}
  std::size_t column;  ///< 0-based offset into the input
};

/// Throws PolynomialParseError. Variables beyond `variables` are rejected.
Polynomial parse_polynomial(std::string_view text, std::size_t variables);

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> basis, TermOrder order)
      : basis_(std::move(basis)), order_(std::move(order)) {}
  const std::vector<Polynomial>& polynomials() const { return basis_; }
  const TermOrder& order() const { return order_; }
  bool is_unit_ideal() const;
  /// Remainder of f after full division by the basis.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  std::vector<Polynomial> basis_;
  TermOrder order_;
};

/// Reduced Groebner basis; the S-pair criterion is re-checked on the result.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrder& order = {});
/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_s_pair_criterion(std::span<const Polynomial> basis, const TermOrder& order);

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> generators);
/// f in rad(I) iff 1 in I + <1 - y f> with an extra variable y.
bool radical_membership(const Polynomial& f, std::span<const Polynomial> generators);

/// Common degree of all terms under deg(T_i) = degrees[i]; nullopt when f is
/// not homogeneous or is zero.
std::optional<IntVector> graded_degree(const Polynomial& f, std::span<const IntVector> degrees);

}  // namespace coxcheck
