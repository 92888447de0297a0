#include "frg/means.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "frg/metric.hpp"

namespace frg {

Density geometric_mean(const Density& mu1, const Density& mu2) {
  require_same_mesh(mu1.mesh(), mu2.mesh(), "geometric_mean");
  std::vector<double> geometric(mu1.size());
  double affinity = 0.0;
  for (std::size_t i = 0; i < geometric.size(); ++i) {
    geometric[i] = std::sqrt(mu1[i] * mu2[i]);
    affinity += mu1.mesh().weight(i) * geometric[i];
  }
  for (double& v : geometric) v /= affinity;
  return Density(mu1.mesh_ptr(), std::move(geometric));
}

Density alpha_power_mean(const Density& mu1, const Density& mu2, double alpha) {
  require_same_mesh(mu1.mesh(), mu2.mesh(), "alpha_power_mean");
  if (alpha == 0.0) return geometric_mean(mu1, mu2);
  // Work with log {1 + (p2/p1)^alpha}^{1/alpha} p1: the unnormalized values
  // carry a 2^{1/alpha} factor that the normalization removes, so shifting
  // by the largest exponent keeps small alpha representable.
  std::vector<double> log_values(mu1.size());
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_values.size(); ++i) {
    const double powered = std::pow(mu2[i] / mu1[i], alpha);
    log_values[i] = std::log1p(powered) / alpha + std::log(mu1[i]);
    if (!std::isfinite(powered) || !std::isfinite(log_values[i])) {
      throw std::domain_error("alpha_power_mean: non-finite intermediate at node " +
                              std::to_string(i) + " for alpha " +
                              std::to_string(alpha));
    }
    shift = std::max(shift, log_values[i]);
  }
  std::vector<double> out(log_values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::exp(log_values[i] - shift);
  }
  return make_density(mu1.mesh_ptr(), std::move(out), /*normalize=*/true);
}

InequalityGap ell_continuity_gap(const Density& mu, const Density& mu1,
                                 const Density& mu_p, const Density& mu1_p) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "ell_continuity_gap");
  require_same_mesh(mu.mesh(), mu_p.mesh(), "ell_continuity_gap");
  require_same_mesh(mu.mesh(), mu1_p.mesh(), "ell_continuity_gap");
  const double lhs =
      std::abs(hellinger_affinity(mu, mu1) - hellinger_affinity(mu_p, mu1_p));
  const double rhs =
      hellinger_distance(mu, mu_p) + hellinger_distance(mu1, mu1_p);
  return {lhs, rhs};
}

InequalityGap phi_continuity_gap(const Density& mu, const Density& mu1,
                                 const Density& mu_p, const Density& mu1_p) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "phi_continuity_gap");
  require_same_mesh(mu.mesh(), mu_p.mesh(), "phi_continuity_gap");
  require_same_mesh(mu.mesh(), mu1_p.mesh(), "phi_continuity_gap");
  const Density mean = geometric_mean(mu, mu1);
  const Density mean_p = geometric_mean(mu_p, mu1_p);
  const double gap = hellinger_distance(mean, mean_p);
  const double lhs = gap * gap;
  const double rhs = 2.0 / hellinger_affinity(mu, mu1) *
                     (hellinger_distance(mu, mu_p) +
                      hellinger_distance(mu1, mu1_p));
  return {lhs, rhs};
}

}  // namespace frg
