#ifndef FRG_GEODESICS_HPP_
#define FRG_GEODESICS_HPP_

#include <vector>

#include "frg/measure.hpp"

namespace frg {

/// Arc-length geodesic data: base point, unit initial velocity and length
/// in (0, pi). Immutable after construction; sampling is a pure function.
class GeodesicSegment {
 public:
  GeodesicSegment(Density base, TangentDensity unit_velocity, double length,
                  bool near_antipodal = false);

  const Density& base() const { return base_; }
  const TangentDensity& unit_velocity() const { return unit_velocity_; }
  double length() const { return length_; }

  /// Endpoints closer than affinity 1e-8 to antipodal are accepted but
  /// flagged: the length saturates below pi and conditioning degrades.
  bool near_antipodal() const { return near_antipodal_; }

  /// Point at arc length t, same contract as geodesic_ivp.
  Density sample(double t) const;

 private:
  Density base_;
  TangentDensity unit_velocity_;
  double length_;
  bool near_antipodal_;
};

struct ThreeTermCoefficients {
  double a1;
  double a2;
  double a3;
  double sum() const { return a1 + a2 + a3; }
};

/// Point of the geodesic ray from mu with initial velocity tau at parameter
/// t. For unit tau the values are (cos(t/2) + (q/p) sin(t/2))^2 p; a general
/// speed s rescales to (cos(st/2) + (q/p)(1/s) sin(st/2))^2 p. Raises when
/// |t| s reaches pi or when any resulting node value is not positive (the
/// ray left the space of positive densities).
Density geodesic_ivp(const Density& mu, const TangentDensity& tau, double t);

/// Unique arc-length segment joining two distinct densities: length is the
/// Fisher-Rao distance, the unit velocity has values
/// (1/sin(l/2)) (sqrt(p1/p) - cos(l/2)) p.
GeodesicSegment geodesic_bvp(const Density& mu, const Density& mu1);

/// Barycentric weights of the segment against (mu, mu1, geometric mean):
/// nonnegative on [0, l] and summing to one.
ThreeTermCoefficients three_term_coeffs(double length, double t);

/// Segment point as a1 mu + a2 mu1 + a3 phi(mu, mu1).
Density geodesic_three_term(const Density& mu, const Density& mu1, double t);

/// Segment midpoint (1 / (4 cos^2(l/4))) (1 + sqrt(p1/p))^2 p; agrees with
/// the normalized 1/2-power mean and with the three-term form at l/2.
Density midpoint(const Density& mu, const Density& mu1);

/// Riemannian exponential: geodesic endpoint at arc length |tau|. Requires
/// tau inside the injectivity domain (see exp_domain_contains with eps = pi).
Density exp_map(const Density& mu, const TangentDensity& tau);

/// Riemannian logarithm: the tangent of norm l(mu, mu1) whose exponential is
/// mu1. Total on valid densities; equal inputs give the zero tangent.
TangentDensity log_map(const Density& mu, const Density& mu1);

/// Membership in the exponential-map domain: |tau| < eps and
/// min_i(q_i/p_i) > -|tau| cot(|tau|/2), where the bound is -2 at |tau| = 0.
bool exp_domain_contains(const Density& mu, const TangentDensity& tau,
                         double eps);

/// Intersection of the two endpoint tangent lines {mu + s d0} and
/// {mu1 + s' dl} in the space of signed measures; coincides with the
/// normalized geometric mean. The 2x2 system is solved on the
/// best-conditioned node pair and the residual verified on every node;
/// meshes whose tangent space is one-dimensional (two atoms) make the lines
/// coincide, and the symmetric solution s' = -s is used there.
Density tangent_line_intersection(const Density& mu, const Density& mu1);

/// Max-over-nodes defect of the geodesic equation
/// d/dt(pdot/p) + (pdot/p)^2/2 + 1/2 = 0 under central differences of
/// step h (stencil spans t +- 2h). O(h^2) small on true unit-speed
/// segments; order-one on corrupted ones.
double geodesic_ode_residual(const GeodesicSegment& segment, double t, double h);

/// Same defect for the curve (cos(t/2) + (q/p) sin(t/2))^2 p with tau taken
/// literally (no unit-speed requirement); tau = 0 gives the constant curve
/// whose residual is exactly 1/2.
double geodesic_ode_residual(const Density& mu, const TangentDensity& tau,
                             double t, double h);

/// Metric value at exp_mu(t tau) of the radial velocity against the image of
/// an orthogonal direction delta_tau; vanishes for every valid input.
double gauss_orthogonality(const Density& mu, const TangentDensity& tau,
                           const TangentDensity& delta_tau, double t);

/// Closed-form geodesic at arbitrary real t, allowing zero node values
/// (the curve is 2 pi periodic and touches the boundary at t = +-pi).
/// Requires unit tau.
NonnegativeDensity extended_geodesic(const Density& mu, const TangentDensity& tau,
                                     double t);

struct RelaxedAntipodalResult {
  /// Sign-flipped geometric-mean values: +phi_i on the chosen half-mass
  /// subset, -phi_i elsewhere. Not a valid TangentDensity in general.
  std::vector<double> tau1;
  /// Curve endpoint at t = pi; equals mu1.
  Density endpoint;
};

/// Discontinuous-velocity geodesic joining mu to mu1 at parameter pi,
/// built by flipping the geometric mean's sign on a node subset carrying
/// exactly half its mass. Available only on meshes (<= 24 nodes) where the
/// exact subset-sum split exists; fractional node splitting is rejected.
RelaxedAntipodalResult relaxed_antipodal(const Density& mu, const Density& mu1);

/// Largest t in (0, pi] below which the unit-speed ray stays strictly
/// positive; pi when the ray only touches zero at the parameter boundary.
double positivity_breakdown(const Density& mu, const TangentDensity& tau);

}  // namespace frg

#endif  // FRG_GEODESICS_HPP_
