#include "frg/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frg/geodesics.hpp"
#include "frg/metric.hpp"

namespace frg {

namespace {
constexpr double kUnitNormTol = 1e-12;
constexpr double kDegenerateAngle = 1e-12;
}  // namespace

SpherePoint::SpherePoint(MeshPtr mesh, std::vector<double> coords)
    : mesh_(std::move(mesh)), coords_(std::move(coords)) {
  if (!mesh_) throw std::invalid_argument("sphere point requires a mesh");
  if (coords_.size() != mesh_->size()) {
    throw std::invalid_argument("sphere point has wrong coordinate count");
  }
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    norm_sq += mesh_->weight(i) * coords_[i] * coords_[i];
  }
  if (std::abs(norm_sq - 1.0) > kUnitNormTol) {
    throw std::invalid_argument("sphere point norm^2 must be 1, got " +
                                std::to_string(norm_sq));
  }
}

SpherePoint embed(const Density& mu) {
  std::vector<double> coords(mu.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = std::sqrt(mu[i]);
  return SpherePoint(mu.mesh_ptr(), std::move(coords));
}

Density unembed(const SpherePoint& point) {
  std::vector<double> values(point.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(point[i] > 0.0)) {
      throw std::invalid_argument("unembed: coordinate at node " +
                                  std::to_string(i) + " is not positive");
    }
    values[i] = point[i] * point[i];
  }
  return Density(point.mesh_ptr(), std::move(values));
}

SpherePoint slerp(const SpherePoint& x, const SpherePoint& y, double s) {
  require_same_mesh(x.mesh(), y.mesh(), "slerp");
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("slerp: s must lie in [0, 1]");
  }
  const double dot =
      std::clamp(weighted_dot(x.coords(), y.coords(), x.mesh()), -1.0, 1.0);
  const double angle = std::acos(dot);
  if (angle < kDegenerateAngle || angle > M_PI - kDegenerateAngle) {
    throw std::invalid_argument("slerp: endpoints are coincident or antipodal");
  }
  const double inv_sin = 1.0 / std::sin(angle);
  const double weight_x = std::sin((1.0 - s) * angle) * inv_sin;
  const double weight_y = std::sin(s * angle) * inv_sin;
  std::vector<double> coords(x.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = weight_x * x[i] + weight_y * y[i];
  }
  return SpherePoint(x.mesh_ptr(), std::move(coords));
}

Density oracle_geodesic(const Density& mu, const Density& mu1, double t) {
  require_same_mesh(mu.mesh(), mu1.mesh(), "oracle_geodesic");
  const double length = oracle_distance(mu, mu1);
  // One-ulp slack: callers may pass arc lengths computed by the direct
  // distance formula, which can differ in the last bit.
  if (!(t >= -1e-12 && t <= length + 1e-12)) {
    throw std::invalid_argument("oracle_geodesic: t = " + std::to_string(t) +
                                " outside [0, " + std::to_string(length) + "]");
  }
  return unembed(slerp(embed(mu), embed(mu1), std::clamp(t / length, 0.0, 1.0)));
}

double oracle_distance(const Density& mu, const Density& mu1) {
  const SpherePoint x = embed(mu);
  const SpherePoint y = embed(mu1);
  // Twice the great-circle angle, via the chord between the embeddings.
  double chord_sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double gap = x[i] - y[i];
    chord_sq += x.mesh().weight(i) * gap * gap;
  }
  const double half_chord = std::clamp(0.5 * std::sqrt(chord_sq), 0.0, 1.0);
  return std::min(4.0 * std::asin(half_chord), std::nextafter(M_PI, 0.0));
}

double spherical_triangle_residual(const Density& a_d, const Density& b_d,
                                   const Density& c_d) {
  require_same_mesh(a_d.mesh(), b_d.mesh(), "spherical_triangle_residual");
  require_same_mesh(a_d.mesh(), c_d.mesh(), "spherical_triangle_residual");
  if (a_d.size() < 3) {
    throw std::invalid_argument(
        "spherical_triangle_residual: a mesh with fewer than 3 nodes is "
        "one-dimensional, every triple is degenerate");
  }
  const double side_a = fisher_rao_distance(b_d, c_d);
  const double side_b = fisher_rao_distance(a_d, c_d);
  const double side_c = fisher_rao_distance(a_d, b_d);
  constexpr double kCoincident = 1e-10;
  if (side_a < kCoincident || side_b < kCoincident || side_c < kCoincident) {
    throw std::invalid_argument(
        "spherical_triangle_residual: coincident vertices");
  }
  const TangentDensity to_b = log_map(a_d, b_d);
  const TangentDensity to_c = log_map(a_d, c_d);
  const double cos_vertex = std::clamp(
      fisher_inner(a_d, to_b, to_c) / (side_c * side_b), -1.0, 1.0);
  if (1.0 - std::abs(cos_vertex) < 1e-12) {
    throw std::invalid_argument("spherical_triangle_residual: collinear triple");
  }
  return std::abs(std::cos(0.5 * side_a) -
                  std::cos(0.5 * side_b) * std::cos(0.5 * side_c) -
                  std::sin(0.5 * side_b) * std::sin(0.5 * side_c) * cos_vertex);
}

DiameterWitness diameter_witness(MeshPtr mesh, double sharpness) {
  if (!mesh) throw std::invalid_argument("diameter_witness: mesh required");
  if (mesh->size() < 8) {
    throw std::invalid_argument("diameter_witness: mesh needs at least 8 nodes");
  }
  if (!(sharpness > 0.0)) {
    throw std::invalid_argument("diameter_witness: sharpness must be positive");
  }
  const std::size_t n = mesh->size();
  const std::size_t half = n / 2;
  const double peak = std::exp(0.5 * sharpness);
  const double floor = std::exp(-0.5 * sharpness);
  std::vector<double> first(n);
  std::vector<double> second(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = i < half ? peak : floor;
    second[i] = i < half ? floor : peak;
  }
  Density mu = make_density(mesh, std::move(first), /*normalize=*/true);
  Density mu1 = make_density(mesh, std::move(second), /*normalize=*/true);
  const double distance = oracle_distance(mu, mu1);
  return {std::move(mu), std::move(mu1), distance};
}

}  // namespace frg
