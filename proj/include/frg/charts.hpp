#ifndef FRG_CHARTS_HPP_
#define FRG_CHARTS_HPP_

#include <utility>
#include <vector>

#include "frg/measure.hpp"

namespace frg {

/// Exponential-chart coordinate centered at a base density: per-node values
/// u with zero mean against the base, E_mu[u] = 0.
class ChartVector {
 public:
  ChartVector(Density base, std::vector<double> values);

  const Density& base() const { return base_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  Density base_;
  std::vector<double> values_;
};

/// Centers raw values against the base before construction.
ChartVector centered_chart_vector(Density base, std::vector<double> raw_values);

/// Chart map exp(u) p / E_mu[exp u]; raises on exp overflow rather than
/// saturating.
Density chart_inverse(const ChartVector& u);

/// Coordinates of nu in the chart at base: log(n/p) - E_base[log(n/p)].
ChartVector chart_forward(const Density& base, const Density& nu);

/// Affine transition to another chart center; represents the same density.
ChartVector chart_transition(const ChartVector& u, const Density& new_base);

/// Covariance of two per-node functions under mu: E[v1 v2] - E[v1] E[v2].
/// Equals the Fisher inner product when v_k = q_k / p. Inputs need not be
/// centered.
double covariance_metric(const Density& mu, const std::vector<double>& v1,
                         const std::vector<double>& v2);

/// Coordinate representation of the geometric mean: the centered half-sum
/// (u + u') / 2 read in the chart at mu1 = phi(base(u), base(u')), which the
/// chart map sends back to the geometric mean of the two represented
/// densities.
ChartVector geometric_mean_in_coords(const ChartVector& u, const ChartVector& u_p,
                                     const Density& mu1);

/// min and max of the density ratio p1/p; the mixture segment through the
/// pair extends to an open interval exactly when these are finite and
/// positive, which on a finite mesh is automatic, with c1 <= 1 <= c2.
std::pair<double, double> mixture_arc_bounds(const Density& mu, const Density& mu1);

/// Largest eps such that mu + t tau stays strictly positive for |t| < eps:
/// min over nonzero q_i of p_i / |q_i|, infinite for the zero tangent.
double positivity_radius(const Density& mu, const TangentDensity& tau);

}  // namespace frg

#endif  // FRG_CHARTS_HPP_
