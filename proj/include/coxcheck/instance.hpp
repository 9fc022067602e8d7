#pragma once

// Instance files: the on-disk description of a Construction input.
//
// JSON object, one top-level key per line when written by coxcheck:
//
//   format       "coxcheck-instance"
//   version      1
//   name         short identifier
//   description  one line of provenance
//   expected     optional {exit, fano_index, rho, n, gamma, equality, factors}
//   ambient      {"degrees": [[deg T_1], ..., [deg T_m]], "polarization": [..]}
//                or {"fan": {"rays": [[..], ...], "cones": [[i, j, ...], ...]}}
//                Cone entries are 1-based ray numbers, matching T1..Tm.
//   relations    [{"degree": [..]} or {"divisor": [c_1..c_m]},
//                 optionally with "polynomial": "T1*T2 + ..."]
//   delta        optional {"rays": [delta_1..delta_m]} and/or {"class": [..]}
//
// Numbers are exact: JSON integers, or strings holding an integer or "p/q".
// Floating-point literals are rejected.

#include "coxcheck/mukai.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxcheck {

/// Malformed input. `location` is "line L, column C" for syntax errors and a
/// JSON pointer for field errors.
struct InputError : std::runtime_error {
  InputError(const std::string& location, const std::string& message)
      : std::runtime_error(location + ": " + message), location(location) {}
  std::string location;
};

struct RelationSpec {
  std::optional<DivisorClass> degree;
  std::optional<IntVector> divisor;
  std::optional<std::string> polynomial;
  bool operator==(const RelationSpec&) const = default;
};

struct ExpectedResult {
  int exit_code = 0;
  std::optional<Integer> fano_index;
  std::optional<std::size_t> rho;
  std::optional<std::size_t> n;
  std::optional<Rational> gamma;
  std::optional<bool> equality;
  std::optional<std::vector<std::size_t>> factors;
  bool operator==(const ExpectedResult&) const = default;
};

struct InstanceFile {
  static constexpr int kVersion = 1;
  int version = kVersion;
  std::string name;
  std::string description;
  std::optional<ExpectedResult> expected;

  // exactly one of the two ambient descriptions
  std::optional<std::vector<DivisorClass>> degrees;  ///< deg T_i, one per generator
  std::optional<DivisorClass> polarization;
  std::optional<std::vector<IntVector>> rays;        ///< one vector per ray
  std::vector<IndexSet> cones;                       ///< 0-based in memory

  std::vector<RelationSpec> relations;
  std::optional<IntVector> delta_rays;
  std::optional<DivisorClass> delta_class;

  bool operator==(const InstanceFile&) const = default;
};

/// Throws InputError.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& f);

/// Builds the pipeline input. Throws InputError locating the offending field.
ConstructionInput to_construction_input(const InstanceFile& f);

}  // namespace coxcheck
