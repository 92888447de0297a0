#include "frg/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frg/means.hpp"
#include "frg/metric.hpp"

namespace frg {

namespace {

constexpr double kUnitNormTol = 1e-10;
constexpr double kCoincidentTol = 1e-12;
constexpr double kNearAntipodalAffinity = 1e-8;

void require_unit_velocity(const Density& mu, const TangentDensity& tau,
                           const char* operation) {
  const double norm = fisher_norm(mu, tau);
  if (std::abs(norm - 1.0) > kUnitNormTol) {
    throw std::invalid_argument(std::string(operation) +
                                ": velocity norm must be 1, got " +
                                std::to_string(norm));
  }
}

void require_distinct(const Density& mu, const Density& mu1,
                      const char* operation) {
  if (sup_distance(mu, mu1) <= kCoincidentTol) {
    throw std::invalid_argument(std::string(operation) +
                                ": endpoints coincide");
  }
}

// Values of the unit-speed closed form without positivity enforcement.
std::vector<double> unit_form_values(const Density& mu, const TangentDensity& tau,
                                     double t) {
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double amplitude = c + tau[i] / mu[i] * s;
    out[i] = amplitude * amplitude * mu[i];
  }
  return out;
}

// Velocity of the unit-speed closed form:
// (cos(t/2) + r sin(t/2)) (-sin(t/2) + r cos(t/2)) p.
std::vector<double> unit_form_velocity(const Density& mu, const TangentDensity& tau,
                                       double t) {
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double r = tau[i] / mu[i];
    out[i] = (c + r * s) * (-s + r * c) * mu[i];
  }
  return out;
}

}  // namespace

GeodesicSegment::GeodesicSegment(Density base, TangentDensity unit_velocity,
                                 double length, bool near_antipodal)
    : base_(std::move(base)),
      unit_velocity_(std::move(unit_velocity)),
      length_(length),
      near_antipodal_(near_antipodal) {
  require_same_mesh(base_.mesh(), unit_velocity_.mesh(), "GeodesicSegment");
  require_unit_velocity(base_, unit_velocity_, "GeodesicSegment");
  if (!(length_ > 0.0 && length_ < M_PI)) {
    throw std::invalid_argument("GeodesicSegment: length must lie in (0, pi), got " +
                                std::to_string(length_));
  }
}

Density GeodesicSegment::sample(double t) const {
  return geodesic_ivp(base_, unit_velocity_, t);
}

Density geodesic_ivp(const Density& mu, const TangentDensity& tau, double t) {
  require_same_mesh(mu.mesh(), tau.mesh(), "geodesic_ivp");
  const double speed = fisher_norm(mu, tau);
  if (speed == 0.0) return mu;
  if (!(std::abs(t) * speed < M_PI)) {
    throw std::domain_error("geodesic_ivp: arc parameter " +
                            std::to_string(t * speed) +
                            " outside (-pi, pi)");
  }
  const double c = std::cos(0.5 * speed * t);
  const double s = std::sin(0.5 * speed * t) / speed;
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Positivity of the pre-square amplitude is the real membership test:
    // the squared value turns positive again after the ray has already
    // crossed the boundary of the positive densities.
    const double amplitude = c + tau[i] / mu[i] * s;
    if (!(amplitude > 0.0)) {
      throw std::domain_error(
          "geodesic_ivp: density vanished at node " + std::to_string(i) +
          " by t = " + std::to_string(t) + "; the ray left the space");
    }
    out[i] = amplitude * amplitude * mu[i];
  }
  return Density(mu.mesh_ptr(), std::move(out));
}

GeodesicSegment geodesic_bvp(const Density& mu, const Density& mu1) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "geodesic_bvp");
  require_distinct(mu, mu1, "geodesic_bvp");
  const double affinity = hellinger_affinity(mu, mu1);
  const double length = fisher_rao_distance(mu, mu1);
  const double half_cos = std::cos(0.5 * length);
  const double half_sin = std::sin(0.5 * length);
  std::vector<double> velocity(mu.size());
  for (std::size_t i = 0; i < velocity.size(); ++i) {
    velocity[i] = (std::sqrt(mu1[i] / mu[i]) - half_cos) / half_sin * mu[i];
  }
  return GeodesicSegment(mu, TangentDensity(mu.mesh_ptr(), std::move(velocity)),
                         length, affinity < kNearAntipodalAffinity);
}

ThreeTermCoefficients three_term_coeffs(double length, double t) {
  if (!(length > 0.0 && length < M_PI)) {
    throw std::invalid_argument("three_term_coeffs: length must lie in (0, pi)");
  }
  if (!(t >= 0.0 && t <= length)) {
    throw std::invalid_argument("three_term_coeffs: t = " + std::to_string(t) +
                                " outside [0, " + std::to_string(length) + "]");
  }
  const double half_sin = std::sin(0.5 * length);
  const double remaining = std::sin(0.5 * (length - t)) / half_sin;
  const double elapsed = std::sin(0.5 * t) / half_sin;
  const double a3 = 2.0 * std::cos(0.5 * length) * elapsed * remaining;
  return {remaining * remaining, elapsed * elapsed, a3};
}

Density geodesic_three_term(const Density& mu, const Density& mu1, double t) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "geodesic_three_term");
  require_distinct(mu, mu1, "geodesic_three_term");
  const double length = fisher_rao_distance(mu, mu1);
  const ThreeTermCoefficients a = three_term_coeffs(length, t);
  const Density mean = geometric_mean(mu, mu1);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.a1 * mu[i] + a.a2 * mu1[i] + a.a3 * mean[i];
  }
  return Density(mu.mesh_ptr(), std::move(out));
}

Density midpoint(const Density& mu, const Density& mu1) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "midpoint");
  require_distinct(mu, mu1, "midpoint");
  const double length = fisher_rao_distance(mu, mu1);
  const double quarter_cos = std::cos(0.25 * length);
  const double scale = 1.0 / (4.0 * quarter_cos * quarter_cos);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double amplitude = 1.0 + std::sqrt(mu1[i] / mu[i]);
    out[i] = scale * amplitude * amplitude * mu[i];
  }
  return Density(mu.mesh_ptr(), std::move(out));
}

Density exp_map(const Density& mu, const TangentDensity& tau) {
  require_same_mesh(mu.mesh(), tau.mesh(), "exp_map");
  const double norm = fisher_norm(mu, tau);
  if (norm == 0.0) return mu;
  if (!exp_domain_contains(mu, tau, M_PI)) {
    throw std::domain_error("exp_map: tangent of norm " + std::to_string(norm) +
                            " outside the exponential domain");
  }
  return geodesic_ivp(mu, tau, 1.0);
}

TangentDensity log_map(const Density& mu, const Density& mu1) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "log_map");
  if (sup_distance(mu, mu1) <= kCoincidentTol) {
    return TangentDensity(mu.mesh_ptr(), std::vector<double>(mu.size(), 0.0));
  }
  const double length = fisher_rao_distance(mu, mu1);
  const double scale = length / std::tan(0.5 * length);
  const Density mean = geometric_mean(mu, mu1);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = scale * (mean[i] - mu[i]);
  }
  return TangentDensity(mu.mesh_ptr(), std::move(out));
}

bool exp_domain_contains(const Density& mu, const TangentDensity& tau,
                         double eps) {
  require_same_mesh(mu.mesh(), tau.mesh(), "exp_domain_contains");
  if (!(eps > 0.0 && eps <= M_PI)) {
    throw std::invalid_argument("exp_domain_contains: eps must lie in (0, pi]");
  }
  const double norm = fisher_norm(mu, tau);
  if (!(norm < eps)) return false;
  // |tau| cot(|tau|/2) -> 2 as |tau| -> 0.
  const double bound = norm == 0.0 ? 2.0 : norm / std::tan(0.5 * norm);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    min_ratio = std::min(min_ratio, tau[i] / mu[i]);
  }
  return min_ratio > -bound;
}

Density tangent_line_intersection(const Density& mu, const Density& mu1) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "tangent_line_intersection");
  require_distinct(mu, mu1, "tangent_line_intersection");
  const GeodesicSegment segment = geodesic_bvp(mu, mu1);
  const double length = segment.length();

  // Velocity at 0 from the geometric-mean form, at l from the closed-form
  // time derivative: two routes that meet at the mean.
  const Density mean = geometric_mean(mu, mu1);
  const double cot_half = 1.0 / std::tan(0.5 * length);
  std::vector<double> start_dir(mu.size());
  for (std::size_t i = 0; i < start_dir.size(); ++i) {
    start_dir[i] = cot_half * (mean[i] - mu[i]);
  }
  const std::vector<double> end_dir =
      unit_form_velocity(mu, segment.unit_velocity(), length);

  // Solve s*start_dir - s'*end_dir = mu1 - mu on the best-conditioned node
  // pair.
  const std::size_t n = mu.size();
  std::vector<double> gap(n);
  for (std::size_t i = 0; i < n; ++i) gap[i] = mu1[i] - mu[i];

  std::size_t row0 = 0;
  double best0 = -1.0;
  double dir_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double magnitude = std::abs(start_dir[i]) + std::abs(end_dir[i]);
    dir_scale = std::max(dir_scale, magnitude);
    if (magnitude > best0) {
      best0 = magnitude;
      row0 = i;
    }
  }
  std::size_t row1 = row0;
  double best_det = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row0) continue;
    const double det =
        start_dir[row0] * (-end_dir[i]) - (-end_dir[row0]) * start_dir[i];
    if (std::abs(det) > std::abs(best_det)) {
      best_det = det;
      row1 = i;
    }
  }

  double s;
  double s_prime;
  if (std::abs(best_det) > 1e-8 * dir_scale * dir_scale) {
    s = (gap[row0] * (-end_dir[row1]) - (-end_dir[row0]) * gap[row1]) / best_det;
    s_prime = (start_dir[row0] * gap[row1] - gap[row0] * start_dir[row1]) / best_det;
  } else {
    // One-dimensional tangent space: the lines coincide, and the symmetric
    // solution s' = -s extends the generic-position answer.
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double direction = start_dir[i] + end_dir[i];
      numerator += mu.mesh().weight(i) * direction * gap[i];
      denominator += mu.mesh().weight(i) * direction * direction;
    }
    s = numerator / denominator;
    s_prime = -s;
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mu[i] + s * start_dir[i];
    const double residual = out[i] - (mu1[i] + s_prime * end_dir[i]);
    if (std::abs(residual) > 1e-10) {
      throw std::logic_error(
          "tangent_line_intersection: inconsistent system, residual " +
          std::to_string(residual) + " at node " + std::to_string(i));
    }
  }
  return Density(mu.mesh_ptr(), std::move(out));
}

double geodesic_ode_residual(const Density& mu, const TangentDensity& tau,
                             double t, double h) {
  require_same_mesh(mu.mesh(), tau.mesh(), "geodesic_ode_residual");
  if (!(h > 0.0)) {
    throw std::invalid_argument("geodesic_ode_residual: h must be positive");
  }
  // Sample the ray with the arc-length normalization of geodesic_ivp: the
  // defect measures being a unit-speed geodesic, which is exactly what a
  // rescaled velocity breaks. The log-derivative pdot/p is taken by central
  // differences, and the outer derivative by another, so the stencil spans
  // t +- 2h.
  std::vector<std::vector<double>> p(5);
  for (int k = -2; k <= 2; ++k) {
    p[k + 2] = geodesic_ivp(mu, tau, t + k * h).values();
  }
  const double inv2h = 1.0 / (2.0 * h);
  double residual = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double f_minus = (p[2][i] - p[0][i]) * inv2h / p[1][i];
    const double f_center = (p[3][i] - p[1][i]) * inv2h / p[2][i];
    const double f_plus = (p[4][i] - p[2][i]) * inv2h / p[3][i];
    const double defect =
        (f_plus - f_minus) * inv2h + 0.5 * f_center * f_center + 0.5;
    residual = std::max(residual, std::abs(defect));
  }
  return residual;
}

double geodesic_ode_residual(const GeodesicSegment& segment, double t, double h) {
  if (!(h > 0.0) || !(t - 2.0 * h > 0.0) || !(t + 2.0 * h < segment.length())) {
    throw std::invalid_argument(
        "geodesic_ode_residual: stencil leaves the parameter domain");
  }
  return geodesic_ode_residual(segment.base(), segment.unit_velocity(), t, h);
}

double gauss_orthogonality(const Density& mu, const TangentDensity& tau,
                           const TangentDensity& delta_tau, double t) {
  require_same_mesh(mu.mesh(), tau.mesh(), "gauss_orthogonality");
  require_same_mesh(mu.mesh(), delta_tau.mesh(), "gauss_orthogonality");
  require_unit_velocity(mu, tau, "gauss_orthogonality");
  const double inner = fisher_inner(mu, tau, delta_tau);
  if (std::abs(inner) > kUnitNormTol) {
    throw std::invalid_argument(
        "gauss_orthogonality: delta_tau is not orthogonal to tau, inner " +
        std::to_string(inner));
  }
  if (!(t > 0.0 && t < M_PI)) {
    throw std::invalid_argument("gauss_orthogonality: t must lie in (0, pi)");
  }
  const std::vector<double> point = unit_form_values(mu, tau, t);
  const std::vector<double> radial = unit_form_velocity(mu, tau, t);
  const double s = std::sin(0.5 * t);
  const double c = std::cos(0.5 * t);
  double metric_value = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(point[i] > 0.0)) {
      throw std::domain_error("gauss_orthogonality: geodesic left the space at "
                              "node " + std::to_string(i));
    }
    const double transverse =
        2.0 * (c + tau[i] / mu[i] * s) * s * (delta_tau[i] / mu[i]) * mu[i];
    metric_value += mu.mesh().weight(i) * radial[i] * transverse / point[i];
  }
  return metric_value;
}

NonnegativeDensity extended_geodesic(const Density& mu, const TangentDensity& tau,
                                     double t) {
  require_same_mesh(mu.mesh(), tau.mesh(), "extended_geodesic");
  require_unit_velocity(mu, tau, "extended_geodesic");
  return NonnegativeDensity(mu.mesh_ptr(), unit_form_values(mu, tau, t));
}

RelaxedAntipodalResult relaxed_antipodal(const Density& mu, const Density& mu1) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "relaxed_antipodal");
  require_distinct(mu, mu1, "relaxed_antipodal");
  const std::size_t n = mu.size();
  if (n > 24) {
    throw std::invalid_argument(
        "relaxed_antipodal: subset-sum search is limited to meshes with at "
        "most 24 nodes");
  }
  const Density mean = geometric_mean(mu, mu1);
  std::vector<double> masses(n);
  for (std::size_t i = 0; i < n; ++i) masses[i] = mu.mesh().weight(i) * mean[i];

  // Exact half-mass subset by meet-in-the-middle over the node indices.
  const std::size_t left_count = n / 2;
  const std::size_t right_count = n - left_count;
  const std::size_t left_total = std::size_t{1} << left_count;
  const std::size_t right_total = std::size_t{1} << right_count;
  std::vector<std::pair<double, std::size_t>> right_sums(right_total);
  for (std::size_t bits = 0; bits < right_total; ++bits) {
    double sum = 0.0;
    for (std::size_t j = 0; j < right_count; ++j) {
      if (bits & (std::size_t{1} << j)) sum += masses[left_count + j];
    }
    right_sums[bits] = {sum, bits};
  }
  std::sort(right_sums.begin(), right_sums.end());

  constexpr double kSubsetTol = 1e-12;
  bool found = false;
  std::size_t left_bits = 0;
  std::size_t right_bits = 0;
  for (std::size_t bits = 0; bits < left_total && !found; ++bits) {
    double sum = 0.0;
    for (std::size_t j = 0; j < left_count; ++j) {
      if (bits & (std::size_t{1} << j)) sum += masses[j];
    }
    const double target = 0.5 - sum;
    auto it = std::lower_bound(right_sums.begin(), right_sums.end(),
                               std::make_pair(target - kSubsetTol, std::size_t{0}));
    for (; it != right_sums.end() && it->first <= target + kSubsetTol; ++it) {
      found = true;
      left_bits = bits;
      right_bits = it->second;
      break;
    }
  }
  if (!found) {
    throw std::invalid_argument(
        "relaxed_antipodal: no node subset carries exactly half the geometric "
        "mean's mass on this mesh");
  }

  std::vector<double> tau1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_subset = i < left_count
                               ? (left_bits & (std::size_t{1} << i)) != 0
                               : (right_bits & (std::size_t{1} << (i - left_count))) != 0;
    tau1[i] = in_subset ? mean[i] : -mean[i];
  }

  const double half_cos = hellinger_affinity(mu, mu1);
  std::vector<double> endpoint(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ratio = tau1[i] / mu[i];
    endpoint[i] = half_cos * half_cos * ratio * ratio * mu[i];
  }
  return {std::move(tau1), Density(mu.mesh_ptr(), std::move(endpoint))};
}

double positivity_breakdown(const Density& mu, const TangentDensity& tau) {
  require_same_mesh(mu.mesh(), tau.mesh(), "positivity_breakdown");
  require_unit_velocity(mu, tau, "positivity_breakdown");
  // Node i vanishes first at t = 2 arctan(1/|r_i|) for r_i = q_i/p_i < 0;
  // nonnegative ratios only vanish at the parameter boundary pi.
  double first = M_PI;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double ratio = tau[i] / mu[i];
    if (ratio < 0.0) {
      first = std::min(first, 2.0 * std::atan(-1.0 / ratio));
    }
  }
  return first;
}

}  // namespace frg
