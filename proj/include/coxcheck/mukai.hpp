#pragma once

// Hypothesis checks for Fano varieties embedded in a smooth projective toric
// variety through their Cox ring, and the Mukai inequality (i_X - 1) rho_X <= n
// computed together with a certificate that can be re-checked by substitution.

#include "coxcheck/bunchedring.hpp"
#include "coxcheck/fans.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcheck {

/// Raised when a statement that must hold for every valid input turns out
/// false. Never caught and repaired inside the pipeline.
struct TheoremContradiction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructionInput {
  GradedCoxPresentation presentation;
  /// Explicit ambient fan Z; otherwise Z = ambient_fan(presentation, polarization).
  std::optional<Fan> ambient;
  /// Delta = sum delta_i D_i^Z, given ray-wise.
  std::optional<IntVector> delta_rays;
  /// Declared class [Delta].
  std::optional<DivisorClass> delta_class;
  /// Polarisation used to select Z in degrees mode; defaults to [-K_X].
  std::optional<DivisorClass> polarization;
};

enum class Verdict { verified, failed, assumed, skipped };
const char* to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::skipped;
  std::string witness;
};

struct Checklist {
  std::vector<Check> checks;
  /// No check failed.
  bool holds() const;
  const Check* find(const std::string& name) const;
};

/// delta is not in conv(0, degrees) \ conv(degrees).
bool degree_not_small(std::span<const Integer> delta, const GradedCoxPresentation& p);

/// Z for the input: the explicit fan, or the reconstructed canonical ambient fan.
Fan resolve_ambient(const ConstructionInput& c);

/// Evaluates every hypothesis. Failed hypotheses are verdicts; structural
/// inconsistencies (shape mismatches) throw std::invalid_argument.
Checklist check_construction(const ConstructionInput& c);

Integer fano_index(std::span<const Integer> l, const LatticeBasis& pic);

struct Representative {
  WeightedRays a;
  Rational sum;
  RatVector lp_optimum;  ///< minimiser of the first LP
  bool adjusted = false; ///< lp_optimum had zero entries and was moved inward
};

/// a in (0,1]^m with Q a = [-K_X] and small coefficient sum. Throws
/// TheoremContradiction when no such a exists or when sum a > m - r.
Representative low_coefficient_representative(const ConstructionInput& c);

struct BoundEntry {
  std::size_t cone = 0;  ///< index into f.cones()
  std::size_t ray = 0;
  Rational value;        ///< <v, C_sigma> + a_v
};

struct IndexBounds {
  std::vector<RatVector> cartier;  ///< C_sigma per maximal cone
  std::vector<BoundEntry> entries; ///< every sigma and every ray v outside it
  Rational minimum;
};

/// Throws std::domain_error if some value is not positive (a not ample).
IndexBounds index_bounds(const Fan& f, std::span<const Rational> a);

struct ExtractionForm {
  std::size_t cone = 0;
  std::size_t ray = 0;
  RatVector gale_values;  ///< l(u^) for every ray u, in ray order
  RatVector form;         ///< l as a vector of Hom(Cl_Q, Q) in the coordinates of `degrees`
};

/// Linear form l_{sigma,v} with l(v^) = 1, l(w^) = lambda_w where
/// v + sum lambda_w w = 0 over the rays w of sigma, and 0 elsewhere. `degrees`
/// is the Gale dual of the rays in the coordinates used for divisor classes.
/// Throws std::domain_error if v is a ray of sigma.
ExtractionForm extraction_form(const Fan& f, const IntMatrix& degrees, std::size_t sigma, std::size_t v);
ExtractionForm extraction_form(const Fan& f, std::size_t sigma, std::size_t v);

/// Convex weights m with sum m_sigma C_sigma = 0: the minimum weight is
/// maximised first, then the lexicographically smallest such vector is taken.
/// Throws std::domain_error when 0 is not in the hull.
RatVector barycentric_certificate(std::span<const RatVector> cartier);

struct EqualityRecognition {
  std::optional<std::vector<std::size_t>> factors;  ///< dimensions of the projective factors
  std::vector<IndexSet> parts;                      ///< I(v) for the rays outside the base cone
  std::vector<std::string> contradictions;
};

/// Runs the classification of the equality case as an algorithm on the base
/// cone f.cones()[0]. Every failed step is recorded as a contradiction.
EqualityRecognition recognize_equality_case(const Fan& f, std::span<const Rational> a, const Integer& index,
                                            const GradedCoxPresentation& p);

enum class Outcome { verified, hypothesis_failed, contradiction };

struct MukaiReport {
  Checklist checklist;

  std::size_t m = 0, r = 0, rho = 0, d = 0, n = 0;
  IntMatrix degrees;                     ///< Q, columns deg(T_i)
  std::vector<DivisorClass> relation_degrees;
  DivisorClass anticanonical;            ///< [-K_X]
  DivisorClass ambient_anticanonical;    ///< [-K_Z]
  std::optional<Fan> ambient;
  bool phi_assumed_maximal = false;
  std::vector<IndexSet> phi;             ///< index sets J of Phi(L)

  // Set only once every hypothesis holds.
  bool computed = false;
  std::vector<IntVector> picard_basis;
  Integer fano_index;
  DivisorClass hyperplane;               ///< H with [-K_X] = i_X H
  IntVector hyperplane_coordinates;      ///< H in picard_basis
  RatVector a;
  Rational a_sum;
  bool a_adjusted = false;
  std::vector<RatVector> cartier;
  std::vector<BoundEntry> bounds;
  Rational min_bound;
  std::vector<ExtractionForm> forms;     ///< parallel to bounds
  RatVector weights;                     ///< m_sigma
  Integer lhs;                           ///< (i_X - 1) rho_X
  bool inequality_holds = false;
  bool equality = false;
  Rational gamma;                        ///< n + rho - sum a
  std::optional<std::vector<std::size_t>> factors;

  std::vector<std::string> contradictions;

  Outcome outcome() const;
};

/// Full pipeline: hypotheses, representative, bounds, weights, inequality,
/// equality case. Never throws for failed hypotheses or contradictions;
/// those are recorded in the report.
MukaiReport verify_mukai_inequality(const ConstructionInput& c);

}  // namespace coxcheck
