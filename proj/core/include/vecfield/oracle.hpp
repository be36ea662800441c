#pragma once

#include "vecfield/bracketing.hpp"
#include "vecfield/exact.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vfc {

/// Size limits for the exhaustive paths. The full family grows like 11^n, the
/// generic family like 4^n.
struct OracleLimits {
  unsigned full_cap = 7;
  unsigned generic_cap = 10;

  /// Defaults, overridden by VECFIELD_ORACLE_CAP="N" (full family; the generic
  /// cap becomes max(10, N)) or "N,G" (both). Malformed values are ignored.
  static OracleLimits from_environment();
};

/// Expected vs. computed for one cross-check.
struct VerificationReport {
  std::string check;
  unsigned n = 0;
  ExactCount expected;
  ExactCount computed;
  std::vector<std::pair<std::string, ExactCount>> breakdown;
  bool pass = false;

  static VerificationReport make(std::string check, unsigned n, ExactCount expected,
                                 ExactCount computed);
};

nlohmann::json to_json(const VerificationReport& report);

/// Valid diagrams on 2n slots fixed by rotation by r (0 <= r < 2n).
/// Throws CapExceeded.
ExactCount fix_count(unsigned n, unsigned r, const OracleLimits& limits = OracleLimits::from_environment());

/// fix_count(n, r) for every r in one enumeration pass.
std::vector<ExactCount> fix_counts(unsigned n, const OracleLimits& limits = OracleLimits::from_environment());

/// Cauchy-Frobenius average of fix_counts. Throws CapExceeded, NotDivisible.
ExactCount burnside_orbit_count(unsigned n, const OracleLimits& limits = OracleLimits::from_environment());

struct OrbitRepresentative {
  BracketingString canonical;
  std::size_t size;  // number of distinct diagrams in the orbit
};

/// Canonical forms of all rotation classes on 2n slots, sorted.
std::vector<OrbitRepresentative> list_orbit_representatives(
    unsigned n, const OracleLimits& limits = OracleLimits::from_environment());

/// Rotation classes of generic diagrams (all-transversal perfect matchings),
/// counted through canonical forms.
ExactCount generic_orbit_count(unsigned n, const OracleLimits& limits = OracleLimits::from_environment());

/// Non-identity fixed points against the vertex-face and edge-face terms.
VerificationReport decomposition_check(unsigned n, const OracleLimits& limits = OracleLimits::from_environment());

/// Edge-count histogram of the trees of all valid strings of length 2n.
std::map<unsigned, ExactCount> pnk_histogram(unsigned n, const OracleLimits& limits = OracleLimits::from_environment());

/// Number of quasi-valid words of length m, by filtering all 5^m words.
ExactCount brute_quasi_count(unsigned m);

/// Every oracle cross-check for 1 <= n <= n_max (capped per family).
std::vector<VerificationReport> run_verification_suite(
    unsigned n_max, const OracleLimits& limits = OracleLimits::from_environment());

}  // namespace vfc
