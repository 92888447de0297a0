#include "frg/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace frg {

namespace {

std::string format_node_error(const char* what, std::size_t node, double value) {
  return std::string(what) + " at node " + std::to_string(node) + " (value " +
         std::to_string(value) + ")";
}

}  // namespace

std::string to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::two_atom: return "two_atom";
    case MeshKind::uniform_atoms: return "uniform";
    case MeshKind::circle: return "circle";
    case MeshKind::custom: return "custom";
  }
  return "custom";
}

MeshKind mesh_kind_from_string(const std::string& name) {
  if (name == "two_atom") return MeshKind::two_atom;
  if (name == "uniform" || name == "n_atom_uniform") return MeshKind::uniform_atoms;
  if (name == "circle") return MeshKind::circle;
  if (name == "custom") return MeshKind::custom;
  throw std::invalid_argument("unknown mesh kind '" + name + "'");
}

QuadratureMesh::QuadratureMesh(MeshKind kind, std::vector<double> weights,
                               std::vector<double> positions)
    : kind_(kind), weights_(std::move(weights)), positions_(std::move(positions)) {
  if (weights_.size() < 2) {
    throw std::invalid_argument("mesh needs at least 2 nodes, got " +
                                std::to_string(weights_.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0)) {
      throw std::invalid_argument(
          format_node_error("mesh weight must be positive", i, weights_[i]));
    }
    sum += weights_[i];
  }
  if (std::abs(sum - 1.0) > tol::mesh_weight_sum) {
    throw std::invalid_argument("mesh weights must sum to 1, got " +
                                std::to_string(sum));
  }
  if (!positions_.empty() && positions_.size() != weights_.size()) {
    throw std::invalid_argument("node positions must match node count");
  }
}

bool QuadratureMesh::compatible_with(const QuadratureMesh& other) const {
  if (this == &other) return true;
  if (size() != other.size()) return false;
  if (has_positions() != other.has_positions()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(weights_[i] - other.weights_[i]) > tol::mesh_compat) return false;
    if (has_positions() &&
        std::abs(positions_[i] - other.positions_[i]) > tol::mesh_compat) {
      return false;
    }
  }
  return true;
}

MeshPtr build_mesh(MeshKind kind, std::size_t n,
                   const std::optional<std::vector<double>>& custom_weights) {
  if (n < 2) {
    throw std::invalid_argument("mesh needs at least 2 nodes, got " +
                                std::to_string(n));
  }
  if (kind == MeshKind::two_atom && n != 2) {
    throw std::invalid_argument("two_atom mesh requires n = 2, got " +
                                std::to_string(n));
  }
  std::vector<double> weights;
  if (custom_weights) {
    if (custom_weights->size() != n) {
      throw std::invalid_argument("custom weights must have n entries");
    }
    weights = *custom_weights;
  } else {
    weights.assign(n, 1.0 / static_cast<double>(n));
  }
  std::vector<double> positions;
  if (kind == MeshKind::circle) {
    positions.resize(n);
    const double step = 2.0 * M_PI / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) positions[k] = step * static_cast<double>(k);
  }
  return std::make_shared<QuadratureMesh>(kind, std::move(weights),
                                          std::move(positions));
}

Density::Density(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (!mesh_) throw std::invalid_argument("density requires a mesh");
  if (values_.size() != mesh_->size()) {
    throw std::invalid_argument("density has " + std::to_string(values_.size()) +
                                " values for a mesh of " +
                                std::to_string(mesh_->size()) + " nodes");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0)) {
      throw std::invalid_argument(
          format_node_error("density value must be positive", i, values_[i]));
    }
    mass += mesh_->weight(i) * values_[i];
  }
  if (std::abs(mass - 1.0) > tol::unit_mass) {
    throw std::invalid_argument("density mass must be 1, got " +
                                std::to_string(mass));
  }
}

TangentDensity::TangentDensity(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (!mesh_) throw std::invalid_argument("tangent requires a mesh");
  if (values_.size() != mesh_->size()) {
    throw std::invalid_argument("tangent has " + std::to_string(values_.size()) +
                                " values for a mesh of " +
                                std::to_string(mesh_->size()) + " nodes");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) mass += mesh_->weight(i) * values_[i];
  if (std::abs(mass) > tol::zero_mass) {
    throw std::invalid_argument("tangent mass must be 0, got " +
                                std::to_string(mass));
  }
}

NonnegativeDensity::NonnegativeDensity(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (!mesh_) throw std::invalid_argument("density requires a mesh");
  if (values_.size() != mesh_->size()) {
    throw std::invalid_argument("density has " + std::to_string(values_.size()) +
                                " values for a mesh of " +
                                std::to_string(mesh_->size()) + " nodes");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0.0) {
      throw std::invalid_argument(
          format_node_error("value must be nonnegative", i, values_[i]));
    }
    mass += mesh_->weight(i) * values_[i];
  }
  if (std::abs(mass - 1.0) > tol::unit_mass) {
    throw std::invalid_argument("density mass must be 1, got " +
                                std::to_string(mass));
  }
}

Density make_density(MeshPtr mesh, std::vector<double> raw_values,
                     bool normalize) {
  if (!mesh) throw std::invalid_argument("density requires a mesh");
  if (raw_values.size() != mesh->size()) {
    throw std::invalid_argument("value count does not match mesh");
  }
  for (std::size_t i = 0; i < raw_values.size(); ++i) {
    if (!(raw_values[i] > 0.0)) {
      throw std::invalid_argument(
          format_node_error("density value must be positive", i, raw_values[i]));
    }
  }
  if (normalize) {
    double mass = 0.0;
    for (std::size_t i = 0; i < raw_values.size(); ++i) {
      mass += mesh->weight(i) * raw_values[i];
    }
    for (double& v : raw_values) v /= mass;
  }
  return Density(std::move(mesh), std::move(raw_values));
}

TangentDensity make_tangent(MeshPtr mesh, std::vector<double> raw_values,
                            bool center) {
  if (!mesh) throw std::invalid_argument("tangent requires a mesh");
  if (raw_values.size() != mesh->size()) {
    throw std::invalid_argument("value count does not match mesh");
  }
  if (center) {
    double mass = 0.0;
    for (std::size_t i = 0; i < raw_values.size(); ++i) {
      mass += mesh->weight(i) * raw_values[i];
    }
    for (double& v : raw_values) v -= mass;
  }
  return TangentDensity(std::move(mesh), std::move(raw_values));
}

void require_same_mesh(const QuadratureMesh& a, const QuadratureMesh& b,
                       const char* operation) {
  if (!a.compatible_with(b)) {
    throw std::invalid_argument(std::string(operation) +
                                ": arguments live on different meshes");
  }
}

std::vector<double> radon_nikodym(const Density& num, const Density& den) {
  require_same_mesh(num.mesh(), den.mesh(), "radon_nikodym");
  std::vector<double> out(num.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = num[i] / den[i];
  return out;
}

std::vector<double> radon_nikodym(const TangentDensity& num, const Density& den) {
  require_same_mesh(num.mesh(), den.mesh(), "radon_nikodym");
  std::vector<double> out(num.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = num[i] / den[i];
  return out;
}

double integrate(const std::vector<double>& values, const QuadratureMesh& mesh) {
  if (values.size() != mesh.size()) {
    throw std::invalid_argument("integrate: value count does not match mesh");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += mesh.weight(i) * values[i];
  return sum;
}

double integrate(const std::vector<double>& values, const Density& against) {
  if (values.size() != against.size()) {
    throw std::invalid_argument("integrate: value count does not match mesh");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += against.mesh().weight(i) * values[i] * against[i];
  }
  return sum;
}

double total_mass(const Density& d) { return integrate(d.values(), d.mesh()); }

double total_mass(const TangentDensity& d) { return integrate(d.values(), d.mesh()); }

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sup_distance: size mismatch");
  }
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

double sup_distance(const Density& a, const Density& b) {
  return sup_distance(a.values(), b.values());
}

}  // namespace frg
