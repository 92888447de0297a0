#ifndef FRG_MEASURE_HPP_
#define FRG_MEASURE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace frg {

// Construction tolerances. Mass constraints are looser than the mesh weight
// sum because densities accumulate roundoff from user-supplied values.
namespace tol {
inline constexpr double mesh_weight_sum = 1e-12;
inline constexpr double unit_mass = 1e-10;
inline constexpr double zero_mass = 1e-10;
inline constexpr double mesh_compat = 1e-12;
}  // namespace tol

enum class MeshKind { two_atom, uniform_atoms, circle, custom };

std::string to_string(MeshKind kind);
MeshKind mesh_kind_from_string(const std::string& name);

/// Finite node set with positive weights summing to one: the discrete
/// model of a compact measured space. Node positions (angles in radians)
/// are stored for circle meshes only and are used by the smoothing module.
class QuadratureMesh {
 public:
  QuadratureMesh(MeshKind kind, std::vector<double> weights,
                 std::vector<double> positions = {});

  MeshKind kind() const { return kind_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  bool has_positions() const { return !positions_.empty(); }
  const std::vector<double>& positions() const { return positions_; }

  /// Structural comparability: equal node count, weights and positions
  /// within 1e-12. Densities loaded from separate files interoperate as
  /// long as their meshes agree.
  bool compatible_with(const QuadratureMesh& other) const;

 private:
  MeshKind kind_;
  std::vector<double> weights_;
  std::vector<double> positions_;
};

using MeshPtr = std::shared_ptr<const QuadratureMesh>;

/// Builds a mesh of the requested kind. Circle meshes get node angles
/// 2*pi*k/n; all kinds accept custom positive weights summing to one.
MeshPtr build_mesh(MeshKind kind, std::size_t n,
                   const std::optional<std::vector<double>>& custom_weights =
                       std::nullopt);

/// Strictly positive per-node density values with unit total mass.
class Density {
 public:
  Density(MeshPtr mesh, std::vector<double> values);

  const QuadratureMesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  MeshPtr mesh_;
  std::vector<double> values_;
};

/// Signed per-node values integrating to zero against the mesh measure.
class TangentDensity {
 public:
  TangentDensity(MeshPtr mesh, std::vector<double> values);

  const QuadratureMesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  MeshPtr mesh_;
  std::vector<double> values_;
};

/// Unit-mass density allowed to vanish at nodes. Extended geodesics at the
/// parameter boundary land here rather than in Density.
class NonnegativeDensity {
 public:
  NonnegativeDensity(MeshPtr mesh, std::vector<double> values);

  const QuadratureMesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  MeshPtr mesh_;
  std::vector<double> values_;
};

/// Validating constructor wrapper; with normalize set, raw values are
/// rescaled by their total mass instead of being required to have mass one.
Density make_density(MeshPtr mesh, std::vector<double> raw_values,
                     bool normalize = false);

/// With center set, the constant total mass is subtracted so the result
/// integrates to zero; otherwise a nonzero total is rejected.
TangentDensity make_tangent(MeshPtr mesh, std::vector<double> raw_values,
                            bool center = false);

void require_same_mesh(const QuadratureMesh& a, const QuadratureMesh& b,
                       const char* operation);

/// Elementwise numerator/denominator: the density of num with respect to den.
std::vector<double> radon_nikodym(const Density& num, const Density& den);
std::vector<double> radon_nikodym(const TangentDensity& num,
                                  const Density& den);

/// Weighted sums: against the mesh this is sum(w_i f_i), against a density
/// sum(w_i f_i p_i).
double integrate(const std::vector<double>& values, const QuadratureMesh& mesh);
double integrate(const std::vector<double>& values, const Density& against);

double total_mass(const Density& d);
double total_mass(const TangentDensity& d);

/// Largest pointwise difference of per-node values.
double sup_distance(const std::vector<double>& a, const std::vector<double>& b);
double sup_distance(const Density& a, const Density& b);

}  // namespace frg

#endif  // FRG_MEASURE_HPP_
