#include "frg/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frg {

double fisher_inner(const Density& mu, const TangentDensity& tau1,
                    const TangentDensity& tau2) {
  require_same_mesh(mu.mesh(), tau1.mesh(), "fisher_inner");
  require_same_mesh(mu.mesh(), tau2.mesh(), "fisher_inner");
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    sum += mu.mesh().weight(i) * tau1[i] * tau2[i] / mu[i];
  }
  return sum;
}

double fisher_norm(const Density& mu, const TangentDensity& tau) {
  return std::sqrt(std::max(0.0, fisher_inner(mu, tau, tau)));
}

double hellinger_affinity(const Density& mu1, const Density& mu2) {
  require_same_mesh(mu1.mesh(), mu2.mesh(), "hellinger_affinity");
  double sum = 0.0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    sum += mu1.mesh().weight(i) * std::sqrt(mu1[i] * mu2[i]);
  }
  return sum;
}

double fisher_rao_distance(const Density& mu1, const Density& mu2) {
  require_same_mesh(mu1.mesh(), mu2.mesh(), "fisher_rao_distance");
  // 2 arccos(affinity) evaluated as 4 arcsin(chord/2) on the square-root
  // embeddings: the chord form loses no precision on nearby densities,
  // where the arccos of an affinity rounded to 1 would.
  double chord_sq = 0.0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    const double gap = std::sqrt(mu1[i]) - std::sqrt(mu2[i]);
    chord_sq += mu1.mesh().weight(i) * gap * gap;
  }
  const double half_chord = std::clamp(0.5 * std::sqrt(chord_sq), 0.0, 1.0);
  // Strictly below pi even for nearly antipodal inputs.
  return std::min(4.0 * std::asin(half_chord), std::nextafter(M_PI, 0.0));
}

double hellinger_distance(const Density& mu1, const Density& mu2) {
  const double affinity = hellinger_affinity(mu1, mu2);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - affinity)));
}

TangentDensity levi_civita(const Density& mu, const TangentDensity& tau1,
                           const TangentDensity& tau2) {
  const double inner = fisher_inner(mu, tau1, tau2);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double product = (tau1[i] / mu[i]) * (tau2[i] / mu[i]);
    out[i] = -0.5 * (product - inner) * mu[i];
  }
  return TangentDensity(mu.mesh_ptr(), std::move(out));
}

std::vector<double> l2_embed(const Density& mu) {
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::sqrt(mu[i]);
  return out;
}

double weighted_dot(const std::vector<double>& f, const std::vector<double>& g,
                    const QuadratureMesh& mesh) {
  if (f.size() != mesh.size() || g.size() != mesh.size()) {
    throw std::invalid_argument("weighted_dot: size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += mesh.weight(i) * f[i] * g[i];
  return sum;
}

double weighted_norm(const std::vector<double>& f, const QuadratureMesh& mesh) {
  return std::sqrt(std::max(0.0, weighted_dot(f, f, mesh)));
}

}  // namespace frg
