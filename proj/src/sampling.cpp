#include "frg/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "frg/geodesics.hpp"
#include "frg/metric.hpp"

namespace frg {

Density random_density(const MeshPtr& mesh, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::vector<double> values(mesh->size());
  for (double& v : values) v = std::exp(spread * gaussian(rng));
  return make_density(mesh, std::move(values), /*normalize=*/true);
}

TangentDensity random_tangent(const MeshPtr& mesh, std::mt19937_64& rng) {
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::vector<double> values(mesh->size());
  for (double& v : values) v = gaussian(rng);
  return make_tangent(mesh, std::move(values), /*center=*/true);
}

TangentDensity random_unit_tangent(const Density& mu, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    TangentDensity tau = random_tangent(mu.mesh_ptr(), rng);
    const double norm = fisher_norm(mu, tau);
    if (norm < 1e-8) continue;
    std::vector<double> values = tau.values();
    for (double& v : values) v /= norm;
    return TangentDensity(mu.mesh_ptr(), std::move(values));
  }
  throw std::runtime_error("random_unit_tangent: degenerate draws");
}

TangentDensity random_orthogonal_unit_tangent(const Density& mu,
                                              const TangentDensity& direction,
                                              std::mt19937_64& rng) {
  if (mu.size() < 3) {
    throw std::invalid_argument(
        "random_orthogonal_unit_tangent: tangent space is one-dimensional");
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    TangentDensity candidate = random_tangent(mu.mesh_ptr(), rng);
    const double along = fisher_inner(mu, direction, candidate);
    std::vector<double> values(candidate.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = candidate[i] - along * direction[i];
    }
    TangentDensity projected(mu.mesh_ptr(), std::move(values));
    const double norm = fisher_norm(mu, projected);
    if (norm < 1e-8) continue;
    std::vector<double> unit = projected.values();
    for (double& v : unit) v /= norm;
    return TangentDensity(mu.mesh_ptr(), std::move(unit));
  }
  throw std::runtime_error("random_orthogonal_unit_tangent: degenerate draws");
}

Density random_density_in_ball(const Density& mu, double radius,
                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> fraction(0.05, 0.95);
  for (int attempt = 0; attempt < 64; ++attempt) {
    TangentDensity direction = random_unit_tangent(mu, rng);
    const double length = fraction(rng) * radius;
    std::vector<double> scaled = direction.values();
    for (double& v : scaled) v *= length;
    TangentDensity tau(mu.mesh_ptr(), std::move(scaled));
    if (!exp_domain_contains(mu, tau, M_PI)) continue;
    return exp_map(mu, tau);
  }
  throw std::runtime_error("random_density_in_ball: no in-domain draw");
}

}  // namespace frg
