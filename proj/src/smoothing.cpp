#include "frg/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace frg {

namespace {

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
  return d > M_PI ? 2.0 * M_PI - d : d;
}

double bump(double scaled_distance) {
  if (scaled_distance >= 1.0) return 0.0;
  return std::exp(1.0 / (scaled_distance * scaled_distance - 1.0));
}

void require_circle(const QuadratureMesh& mesh, const char* operation) {
  if (!mesh.has_positions()) {
    throw std::invalid_argument(std::string(operation) +
                                ": requires a circle mesh with node positions");
  }
}

// Convolution against the bump kernel evaluated from node positions, each
// row normalized to a convex combination of the inputs.
std::vector<double> convolve(const QuadratureMesh& mesh, double delta,
                             const std::vector<double>& values) {
  const std::size_t n = mesh.size();
  const std::vector<double>& positions = mesh.positions();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double accumulated = 0.0;
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double k = bump(circular_distance(positions[i], positions[j]) / delta);
      if (k == 0.0) continue;
      const double mass = k * mesh.weight(j);
      accumulated += mass * values[j];
      row_sum += mass;
    }
    out[i] = accumulated / row_sum;
  }
  return out;
}

}  // namespace

BumpKernel::BumpKernel(MeshPtr mesh, double delta, std::vector<double> node_weights)
    : mesh_(std::move(mesh)), delta_(delta), node_weights_(std::move(node_weights)) {
  if (!mesh_) throw std::invalid_argument("kernel requires a mesh");
  require_circle(*mesh_, "BumpKernel");
  if (node_weights_.size() != mesh_->size()) {
    throw std::invalid_argument("kernel weight count must match mesh");
  }
  double total = 0.0;
  const double anchor = mesh_->positions()[0];
  for (std::size_t i = 0; i < node_weights_.size(); ++i) {
    if (node_weights_[i] < 0.0) {
      throw std::invalid_argument("kernel weights must be nonnegative");
    }
    if (node_weights_[i] > 0.0 &&
        circular_distance(mesh_->positions()[i], anchor) >= delta_) {
      throw std::invalid_argument("kernel support exceeds its radius at node " +
                                  std::to_string(i));
    }
    total += node_weights_[i] * mesh_->weight(i);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("kernel weighted sum must be 1, got " +
                                std::to_string(total));
  }
}

BumpKernel make_kernel(MeshPtr mesh, double delta) {
  if (!mesh) throw std::invalid_argument("make_kernel: mesh required");
  require_circle(*mesh, "make_kernel");
  const double spacing = 2.0 * M_PI / static_cast<double>(mesh->size());
  if (!(delta > spacing && delta < M_PI)) {
    throw std::invalid_argument(
        "make_kernel: delta must exceed the node spacing " +
        std::to_string(spacing) + " and stay below pi, got " +
        std::to_string(delta));
  }
  const double anchor = mesh->positions()[0];
  std::vector<double> weights(mesh->size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = bump(circular_distance(mesh->positions()[i], anchor) / delta);
    total += weights[i] * mesh->weight(i);
  }
  for (double& w : weights) w /= total;
  return BumpKernel(std::move(mesh), delta, std::move(weights));
}

MollifyResult mollify_detailed(const Density& p, const BumpKernel& kernel) {
  require_same_mesh(p.mesh(), kernel.mesh(), "mollify");
  std::vector<double> smoothed = convolve(p.mesh(), kernel.delta(), p.values());
  const double mass = integrate(smoothed, p.mesh());
  const double renormalizer = 1.0 / mass;
  for (double& v : smoothed) v *= renormalizer;
  return {Density(p.mesh_ptr(), std::move(smoothed)), renormalizer};
}

Density mollify(const Density& p, const BumpKernel& kernel) {
  return mollify_detailed(p, kernel).density;
}

TangentDensity mollify_tangent(const TangentDensity& q, const BumpKernel& kernel) {
  require_same_mesh(q.mesh(), kernel.mesh(), "mollify_tangent");
  std::vector<double> smoothed = convolve(q.mesh(), kernel.delta(), q.values());
  const double mass = integrate(smoothed, q.mesh());
  for (double& v : smoothed) v -= mass;
  return TangentDensity(q.mesh_ptr(), std::move(smoothed));
}

}  // namespace frg
