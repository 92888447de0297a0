#ifndef FRG_VERIFICATION_HPP_
#define FRG_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "frg/measure.hpp"

namespace frg {

struct CheckResult {
  std::string name;
  bool pass;
  double residual;   // worst observed defect; negative margins mean slack
  double tolerance;  // pass means residual <= tolerance
  std::string detail;
};

/// The full seeded property suite: closed-form worked example, oracle
/// equivalence across meshes, geodesic/exp-log/metric laws, curvature,
/// diameter witnesses, continuity bounds, chart identities, the relaxed
/// antipodal construction and the mollifier contracts. Deterministic for a
/// fixed seed.
std::vector<CheckResult> acceptance_suite(std::uint64_t seed);

/// Property checks specialized to one density pair (same identities,
/// evaluated on the given inputs and seeded perturbations of them).
/// tolerance_scale multiplies every tolerance.
std::vector<CheckResult> verify_pair(const Density& a, const Density& b,
                                     std::uint64_t seed,
                                     double tolerance_scale = 1.0);

bool all_pass(const std::vector<CheckResult>& results);

/// One line per result: PASS/FAIL, name, residual and tolerance.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace frg

#endif  // FRG_VERIFICATION_HPP_
