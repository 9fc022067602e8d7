#pragma once

// Lattice fans of toric varieties, Gale duality, moment polytopes and
// Q-Cartier data.

#include "coxcheck/exactmath.hpp"
#include "coxcheck/polyhedra.hpp"

#include <map>
#include <span>
#include <vector>

namespace coxcheck {

using IndexSet = std::vector<std::size_t>;  // sorted

/// A fan in N = Z^d given by primitive ray generators (columns of `rays`) and
/// its maximal cones as sets of ray indices.
class Fan {
 public:
  Fan() = default;
  /// Throws std::invalid_argument if a ray is not primitive, the rays do not
  /// span Q^d, or a cone refers to an unknown ray.
  Fan(IntMatrix rays, std::vector<IndexSet> cones);

  std::size_t dimension() const { return rays_.rows(); }
  std::size_t ray_count() const { return rays_.cols(); }
  const IntMatrix& rays() const { return rays_; }
  IntVector ray(std::size_t i) const { return rays_.column(i); }
  const std::vector<IndexSet>& cones() const { return cones_; }
  /// Index of the maximal cone with exactly these rays, if any.
  std::optional<std::size_t> find_cone(const IndexSet& rays) const;

 private:
  IntMatrix rays_;
  std::vector<IndexSet> cones_;
};

/// Same rays (as vectors) and same cones, ignoring ray and cone order.
bool same_fan(const Fan& a, const Fan& b);

struct FanProperties {
  bool is_smooth = false;
  bool is_simplicial = false;
  bool is_complete = false;
};

/// Completeness is decided for simplicial fans: every facet of a maximal cone
/// is shared by exactly two maximal cones lying on opposite sides of it, the
/// adjacency graph is connected, and an interior point of the first cone is
/// covered by no other cone (so the pseudomanifold wraps the sphere once).
FanProperties fan_checks(const Fan& f);

/// Per-ray coefficients 0 < a_v <= 1.
class WeightedRays {
 public:
  WeightedRays() = default;
  /// Throws std::domain_error when some coefficient leaves (0, 1].
  explicit WeightedRays(RatVector coefficients);
  static WeightedRays ones(std::size_t m) { return WeightedRays(RatVector(m, Rational(1))); }

  std::size_t size() const { return a_.size(); }
  const Rational& operator[](std::size_t i) const { return a_[i]; }
  const RatVector& values() const { return a_; }

 private:
  RatVector a_;
};

/// A multiset of vectors, kept as matrix columns.
struct VectorConfiguration {
  RatMatrix vectors;
};

/// Gale dual Q of a ray matrix P: rows of Q form the Hermite-normalised basis
/// of the integer relations among the columns of P. Works in both directions
/// (the Gale dual of Q recovers P up to GL(d, Z)). Throws std::domain_error if
/// the columns do not span Q^rows.
IntMatrix gale_dual(const IntMatrix& p);

/// P and Q are Gale dual over Z: P Q^T = 0, ranks add up, and the rows of Q
/// span the saturated relation lattice of P.
bool is_gale_pair(const IntMatrix& p, const IntMatrix& q);

HPolytope moment_polytope(const Fan& f, std::span<const Rational> a);

/// C_sigma for every maximal cone (indexed like f.cones()): the solution of
/// <w, C> = -a_w for the rays w of sigma. Throws std::domain_error for a
/// non-simplicial cone.
std::vector<RatVector> cartier_data(const Fan& f, std::span<const Rational> a);

/// Strict convexity of the support function: <v, C_sigma> + a_v > 0 for every
/// maximal cone sigma and every ray v outside it.
bool is_ample(const Fan& f, std::span<const Rational> a);

/// Fan whose maximal cones are the normal cones at the vertices. Rays are the
/// primitive inner facet normals. Throws std::domain_error for a
/// lower-dimensional polytope.
Fan normal_fan(const VPolytope& p);

/// For each position i in cone `sigma`, the cone sharing all rays of sigma
/// except the i-th. Throws std::domain_error if a neighbour is missing.
std::vector<std::size_t> facet_neighbors(const Fan& f, std::size_t sigma);

struct Homogenisation {
  VectorConfiguration lifted;  ///< (v, a_v) for each ray, then (0, ..., 0, 1)
  VectorConfiguration gale;    ///< v^ for each ray, then -sum a_v v^
};

/// Weighted homogenisation of the rays together with its Gale dual
/// configuration; throws std::logic_error if the pair fails the Gale check.
Homogenisation weighted_homogenisation(const Fan& f, std::span<const Rational> a);

}  // namespace coxcheck
