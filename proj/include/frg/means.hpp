#ifndef FRG_MEANS_HPP_
#define FRG_MEANS_HPP_

#include <utility>

#include "frg/measure.hpp"

namespace frg {

/// Normalized geometric mean: values sqrt(p1_i p2_i) rescaled to unit mass.
/// Symmetric in its arguments and idempotent on equal inputs.
Density geometric_mean(const Density& mu1, const Density& mu2);

/// Normalized alpha-power mean {1 + (p2/p1)^alpha}^{1/alpha} p1 rescaled to
/// unit mass. alpha = 0 dispatches to the geometric mean (the limit case);
/// non-finite intermediates for extreme alpha raise instead of saturating.
/// The 1/2 from the scalar power mean ((a^alpha + b^alpha)/2)^{1/alpha} is
/// omitted on purpose: the normalization constant absorbs it for alpha != 0.
Density alpha_power_mean(const Density& mu1, const Density& mu2, double alpha);

struct InequalityGap {
  double lhs;
  double rhs;
  bool holds() const { return lhs <= rhs; }
};

/// Continuity bound for the distance: lhs = |cos(l(mu,mu1)/2) -
/// cos(l(mu_p,mu1_p)/2)|, rhs = ||sqrt p - sqrt p'|| + ||sqrt p1 - sqrt p1'||
/// in weighted L2. The bound lhs <= rhs holds for all inputs.
InequalityGap ell_continuity_gap(const Density& mu, const Density& mu1,
                                 const Density& mu_p, const Density& mu1_p);

/// Continuity bound for the geometric mean: lhs = ||sqrt P - sqrt P'||^2 for
/// the two geometric means, rhs = (2 / affinity(mu, mu1)) * (sum of the two
/// endpoint L2 gaps).
InequalityGap phi_continuity_gap(const Density& mu, const Density& mu1,
                                 const Density& mu_p, const Density& mu1_p);

}  // namespace frg

#endif  // FRG_MEANS_HPP_
