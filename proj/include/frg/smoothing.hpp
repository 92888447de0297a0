#ifndef FRG_SMOOTHING_HPP_
#define FRG_SMOOTHING_HPP_

#include <vector>

#include "frg/measure.hpp"

namespace frg {

/// Discrete bump-function kernel on a circle mesh: weights
/// exp(1/((d/delta)^2 - 1)) at angular distance d below delta, zero beyond,
/// normalized so the weighted node sum is one. Anchored at node 0; offsets
/// index the cyclic shift.
class BumpKernel {
 public:
  BumpKernel(MeshPtr mesh, double delta, std::vector<double> node_weights);

  const QuadratureMesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  double delta() const { return delta_; }
  const std::vector<double>& node_weights() const { return node_weights_; }

 private:
  MeshPtr mesh_;
  double delta_;
  std::vector<double> node_weights_;
};

/// Requires a circle mesh and a support radius between the node spacing and
/// pi.
BumpKernel make_kernel(MeshPtr mesh, double delta);

struct MollifyResult {
  Density density;
  /// Factor applied after convolution to restore unit mass exactly; within
  /// O(delta^2) of one on nonuniform weights, one up to roundoff otherwise.
  double renormalizer;
};

/// Circular convolution with the kernel followed by exact renormalization.
/// Positive input stays positive; oscillation (max - min) never grows.
MollifyResult mollify_detailed(const Density& p, const BumpKernel& kernel);
Density mollify(const Density& p, const BumpKernel& kernel);

/// Same convolution on a tangent; the zero total is restored exactly by
/// re-centering afterwards.
TangentDensity mollify_tangent(const TangentDensity& q, const BumpKernel& kernel);

}  // namespace frg

#endif  // FRG_SMOOTHING_HPP_
