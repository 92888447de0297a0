#ifndef FRG_SPHERE_HPP_
#define FRG_SPHERE_HPP_

#include <vector>

#include "frg/measure.hpp"

namespace frg {

/// Point on the unit sphere of the weighted L2 space over a mesh. The
/// square-root embedding lands densities on the strictly positive part.
class SpherePoint {
 public:
  SpherePoint(MeshPtr mesh, std::vector<double> coords);

  const QuadratureMesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }

 private:
  MeshPtr mesh_;
  std::vector<double> coords_;
};

SpherePoint embed(const Density& mu);

/// Inverse of the embedding on the positive orthant: values coords^2.
Density unembed(const SpherePoint& point);

/// Great-circle interpolation (sin((1-s) theta) x + sin(s theta) y) / sin
/// theta for s in [0, 1]; rejects coincident or antipodal endpoints.
SpherePoint slerp(const SpherePoint& x, const SpherePoint& y, double s);

/// Geodesic point computed entirely through the sphere: embed, slerp at
/// t / distance, square back. Independent arithmetic from the density-space
/// formulas, used to cross-check them.
Density oracle_geodesic(const Density& mu, const Density& mu1, double t);

/// 2 arccos of the weighted dot of the embeddings; same clamping and
/// below-pi saturation as fisher_rao_distance but an independent code path.
double oracle_distance(const Density& mu, const Density& mu1);

/// Defect of the constant-curvature-1/4 law of cosines
/// cos(a/2) = cos(b/2) cos(c/2) + sin(b/2) sin(c/2) cos A
/// on the triangle (a_d, b_d, c_d), with the vertex angle A at a_d computed
/// intrinsically from log maps. Rejects coincident or collinear triples.
double spherical_triangle_residual(const Density& a_d, const Density& b_d,
                                   const Density& c_d);

struct DiameterWitness {
  Density mu;
  Density mu1;
  double distance;
};

/// Two opposed peaked densities on disjoint node halves with a strictly
/// positive floor; their distance approaches pi as sharpness grows but
/// never attains it.
DiameterWitness diameter_witness(MeshPtr mesh, double sharpness);

}  // namespace frg

#endif  // FRG_SPHERE_HPP_
