#pragma once

// Exact cones, polytopes and linear programming over Q.

#include "coxcheck/exactmath.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coxcheck {

// ---------------------------------------------------------------------------
// Linear programming

/// minimize c.x  subject to  a x = b,  lower <= x <= upper.
/// A missing bound is infinite.
struct LPProblem {
  RatMatrix a;
  RatVector b;
  RatVector c;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  /// Problem with `vars` variables, no rows, zero objective and x >= 0.
  static LPProblem nonnegative(std::size_t vars);
  std::size_t variables() const { return c.size(); }
  void add_row(std::span<const Rational> coefficients, const Rational& rhs);
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational objective;  ///< set when optimal
  RatVector x;         ///< optimal point
  /// Row multipliers y proving infeasibility: for every x inside the bounds,
  /// y.(a x) < y.b. Empty unless status is infeasible.
  RatVector farkas;
};

/// Two-phase dense tableau simplex with Bland's rule. Results are re-verified
/// (feasibility by substitution, certificates by the box bound) before return.
LPResult lp_solve(const LPProblem& p);

bool satisfies(const LPProblem& p, std::span<const Rational> x);
/// Checks an infeasibility certificate using only substitution and the bounds.
bool verify_infeasibility(const LPProblem& p, std::span<const Rational> y);

// ---------------------------------------------------------------------------
// Polytopes

/// <normal, y> + offset >= 0
struct HalfSpace {
  RatVector normal;
  Rational offset;
};

struct HPolytope {
  std::size_t dimension = 0;
  std::vector<HalfSpace> halfspaces;

  bool contains(std::span<const Rational> y) const;
  /// Bounded and nonempty, decided by minimising and maximising every coordinate.
  bool is_bounded() const;
};

class VPolytope {
 public:
  VPolytope() = default;
  /// Takes the listed points as the vertex set; they must be irredundant.
  VPolytope(std::size_t dimension, std::vector<RatVector> vertices);
  /// Convex hull of arbitrary points; drops duplicates and non-vertices.
  static VPolytope hull(std::size_t dimension, std::span<const RatVector> points);

  std::size_t dimension() const { return dimension_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  bool contains(std::span<const Rational> y) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<RatVector> vertices_;
};

/// Equal vertex sets, order ignored.
bool same_vertices(const VPolytope& a, const VPolytope& b);

enum class PolytopeStatus { ok, empty, unbounded };

struct VertexEnumeration {
  PolytopeStatus status = PolytopeStatus::ok;
  VPolytope polytope;
};

/// Vertices of a bounded H-polytope by the double description method.
VertexEnumeration dual_description(const HPolytope& h);

/// Facets of a full-dimensional V-polytope. Normals are primitive integer
/// vectors. Throws std::domain_error for lower-dimensional input.
HPolytope v_to_h(const VPolytope& v);

/// {x : <x, c> + 1 >= 0 for all vertices c}, in V-form. Throws
/// std::domain_error when the origin is not in the interior of p.
VPolytope polar_dual(const VPolytope& p);

// ---------------------------------------------------------------------------
// Membership and cones

/// x in conv(points), or conv(points + {0}) when include_origin is set.
bool hull_membership(std::span<const Rational> x, std::span<const RatVector> points,
                     bool include_origin);
/// Convex weights w >= 0, sum w = 1 with sum w_i p_i = x, if any.
std::optional<RatVector> convex_combination(std::span<const Rational> x,
                                            std::span<const RatVector> points);

struct RationalCone {
  std::size_t dimension = 0;
  std::vector<RatVector> generators;  ///< empty means the zero cone
};

/// Membership in the cone, or in its (topological) interior.
bool cone_membership(std::span<const Rational> x, const RationalCone& c, bool interior);

/// Cone given by linear inequalities <n, x> >= 0 and equalities <e, x> = 0.
struct HCone {
  std::size_t dimension = 0;
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equalities;

  bool contains(std::span<const Rational> x) const;
  /// Interior of the cone in Q^dimension: every inequality strict, no equalities.
  bool contains_interior(std::span<const Rational> x) const;
  /// Extreme rays (primitive) of a pointed cone.
  std::vector<IntVector> extreme_rays() const;
};

HCone h_form(const RationalCone& c);
HCone intersect(const HCone& a, const HCone& b);

}  // namespace coxcheck
