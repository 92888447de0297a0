#include "frg/charts.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "frg/means.hpp"

namespace frg {

namespace {

constexpr double kCenteringTol = 1e-10;

double expectation(const Density& mu, const std::vector<double>& values) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += mu.mesh().weight(i) * mu[i] * values[i];
  }
  return sum;
}

}  // namespace

ChartVector::ChartVector(Density base, std::vector<double> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (values_.size() != base_.size()) {
    throw std::invalid_argument("chart vector has wrong value count");
  }
  const double mean = expectation(base_, values_);
  if (std::abs(mean) > kCenteringTol) {
    throw std::invalid_argument("chart vector must be centered, E[u] = " +
                                std::to_string(mean));
  }
}

ChartVector centered_chart_vector(Density base, std::vector<double> raw_values) {
  if (raw_values.size() != base.size()) {
    throw std::invalid_argument("chart vector has wrong value count");
  }
  const double mean = expectation(base, raw_values);
  for (double& v : raw_values) v -= mean;
  return ChartVector(std::move(base), std::move(raw_values));
}

Density chart_inverse(const ChartVector& u) {
  const Density& base = u.base();
  std::vector<double> values(u.size());
  double normalizer = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::exp(u[i]) * base[i];
    if (!std::isfinite(values[i])) {
      throw std::domain_error("chart_inverse: exp overflow at node " +
                              std::to_string(i));
    }
    normalizer += base.mesh().weight(i) * values[i];
  }
  for (double& v : values) v /= normalizer;
  return Density(base.mesh_ptr(), std::move(values));
}

ChartVector chart_forward(const Density& base, const Density& nu) {
  require_same_mesh(base.mesh(), nu.mesh(), "chart_forward");
  std::vector<double> values(base.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::log(nu[i] / base[i]);
  }
  const double mean = expectation(base, values);
  for (double& v : values) v -= mean;
  return ChartVector(base, std::move(values));
}

ChartVector chart_transition(const ChartVector& u, const Density& new_base) {
  const Density& old_base = u.base();
  require_same_mesh(old_base.mesh(), new_base.mesh(), "chart_transition");
  std::vector<double> values(u.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = u[i] + std::log(old_base[i] / new_base[i]);
  }
  const double mean = expectation(new_base, values);
  for (double& v : values) v -= mean;
  return ChartVector(new_base, std::move(values));
}

double covariance_metric(const Density& mu, const std::vector<double>& v1,
                         const std::vector<double>& v2) {
  if (v1.size() != mu.size() || v2.size() != mu.size()) {
    throw std::invalid_argument("covariance_metric: value count mismatch");
  }
  double cross = 0.0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double mass = mu.mesh().weight(i) * mu[i];
    cross += mass * v1[i] * v2[i];
    mean1 += mass * v1[i];
    mean2 += mass * v2[i];
  }
  return cross - mean1 * mean2;
}

ChartVector geometric_mean_in_coords(const ChartVector& u, const ChartVector& u_p,
                                     const Density& mu1) {
  const Density& base = u.base();
  const Density& base_p = u_p.base();
  require_same_mesh(base.mesh(), base_p.mesh(), "geometric_mean_in_coords");
  require_same_mesh(base.mesh(), mu1.mesh(), "geometric_mean_in_coords");
  const Density mean = geometric_mean(base, base_p);
  if (sup_distance(mean, mu1) > 1e-10) {
    throw std::invalid_argument(
        "geometric_mean_in_coords: mu1 is not the geometric mean of the chart "
        "centers");
  }
  const double mean_u = expectation(base, u.values());
  const double mean_u_p = expectation(base_p, u_p.values());
  std::vector<double> values(u.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = 0.5 * (u[i] - mean_u + u_p[i] - mean_u_p);
  }
  const double recentering = expectation(mu1, values);
  for (double& v : values) v -= recentering;
  return ChartVector(mu1, std::move(values));
}

std::pair<double, double> mixture_arc_bounds(const Density& mu, const Density& mu1) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "mixture_arc_bounds");
  double lower = std::numeric_limits<double>::infinity();
  double upper = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double ratio = mu1[i] / mu[i];
    lower = std::min(lower, ratio);
    upper = std::max(upper, ratio);
  }
  return {lower, upper};
}

double positivity_radius(const Density& mu, const TangentDensity& tau) {
  require_same_mesh(mu.mesh(), tau.mesh(), "positivity_radius");
  double radius = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (tau[i] != 0.0) {
      radius = std::min(radius, mu[i] / std::abs(tau[i]));
    }
  }
  return radius;
}

}  // namespace frg
