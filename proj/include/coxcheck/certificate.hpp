#pragma once

// Independent re-validation of a MukaiReport from its stored witnesses. Uses
// substitution and exact arithmetic only: no linear programs, no Groebner
// bases, no lattice reductions.

#include "coxcheck/mukai.hpp"

#include <string>
#include <vector>

namespace coxcheck {

struct CertificateResult {
  std::size_t checked = 0;          ///< number of individual identities tested
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Reports without a computed certificate (failed hypotheses) only have their
/// bookkeeping identities checked.
CertificateResult check_certificate(const MukaiReport& report);

}  // namespace coxcheck
