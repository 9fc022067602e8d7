#pragma once

// Graded Cox ring presentations and the bunched-ring layer on top of them.

#include "coxcheck/exactmath.hpp"
#include "coxcheck/fans.hpp"
#include "coxcheck/groebner.hpp"
#include "coxcheck/polyhedra.hpp"

#include <vector>

namespace coxcheck {

/// Element of Cl = Z^rho.
using DivisorClass = IntVector;

/// C[T_1..T_m]/<g_1..g_r> graded by Cl = Z^rho, deg(T_i) = column i of Q.
class GradedCoxPresentation {
 public:
  GradedCoxPresentation() = default;
  /// Throws std::invalid_argument when r >= m, the shapes disagree, the degree
  /// columns do not generate Z^rho, or a relation polynomial is not
  /// homogeneous of its declared degree.
  GradedCoxPresentation(IntMatrix degrees, std::vector<DivisorClass> relation_degrees,
                        std::vector<Polynomial> relations = {});

  std::size_t generator_count() const { return q_.cols(); }
  std::size_t class_rank() const { return q_.rows(); }
  std::size_t relation_count() const { return relation_degrees_.size(); }

  const IntMatrix& degrees() const { return q_; }
  DivisorClass degree(std::size_t i) const { return q_.column(i); }
  std::vector<DivisorClass> degree_list() const { return q_.column_list(); }
  const std::vector<DivisorClass>& relation_degrees() const { return relation_degrees_; }
  bool has_polynomials() const { return !relations_.empty(); }
  const std::vector<Polynomial>& relations() const { return relations_; }

 private:
  IntMatrix q_;
  std::vector<DivisorClass> relation_degrees_;
  std::vector<Polynomial> relations_;
};

/// A collection of tau_J = (deg T_j : j in J).
struct Bunch {
  std::size_t class_rank = 0;
  std::vector<IndexSet> index_sets;
  std::vector<std::vector<DivisorClass>> cones;  ///< cones[k] = tau of index_sets[k]
  /// Set when relation polynomials were missing and Phi(L) was taken to be
  /// Sigma(L)^.
  bool phi_assumed_maximal = false;
};

/// Intersection of cone(deg T_i : i != j) over all j.
HCone moving_cone(const GradedCoxPresentation& p);

/// All tau_J with L in cone(tau_J).
Bunch sigma_bunch(const GradedCoxPresentation& p, std::span<const Integer> l);

/// Members tau_J of sigma_bunch whose face is relevant for X:
/// prod_{j in J} T_j not in rad(I + <T_i : i not in J>).
Bunch phi_bunch(const GradedCoxPresentation& p, std::span<const Integer> l);

/// Canonical toric ambient fan for the polarisation L. Maximal cones are the
/// sets I with |I| = m - rho and L in the interior of cone(deg T_j : j not in I).
/// Throws std::domain_error when L is not in the interior of Mov, when
/// d = m - rho is zero, or when L lies on a chamber wall ("non-generic
/// polarization"), and when the result is not smooth and complete.
Fan ambient_fan(const GradedCoxPresentation& p, std::span<const Integer> l);

/// Intersection of the Z-spans of the members of b.
LatticeBasis picard_group(const Bunch& b);

/// sum deg(T_i) - sum deg(g_j).
DivisorClass anticanonical_class(const GradedCoxPresentation& p);

/// Every <tau>_Z has index 1 in Z^rho.
bool is_locally_factorial(const Bunch& b);

/// Sufficient test for R^* = C^*: no generator of degree zero and the cone over
/// all degrees is pointed.
bool units_condition_sufficient(const GradedCoxPresentation& p);

}  // namespace coxcheck
