#ifndef FRG_METRIC_HPP_
#define FRG_METRIC_HPP_

#include <vector>

#include "frg/measure.hpp"

namespace frg {

/// Fisher information inner product at mu: sum_i w_i (q1_i/p_i)(q2_i/p_i) p_i.
double fisher_inner(const Density& mu, const TangentDensity& tau1,
                    const TangentDensity& tau2);

double fisher_norm(const Density& mu, const TangentDensity& tau);

/// Hellinger affinity sum_i w_i sqrt(p1_i p2_i), in (0, 1] with 1 iff equal.
double hellinger_affinity(const Density& mu1, const Density& mu2);

/// Riemannian distance 2*arccos(affinity), always strictly below pi.
/// The arccos argument is clamped to [-1, 1] against rounding overshoot.
double fisher_rao_distance(const Density& mu1, const Density& mu2);

/// sqrt(2 (1 - affinity)); coincides with the weighted L2 distance of the
/// square-root embeddings.
double hellinger_distance(const Density& mu1, const Density& mu2);

/// Levi-Civita connection value -1/2 ((q1/p)(q2/p) - G(tau1, tau2)) p.
TangentDensity levi_civita(const Density& mu, const TangentDensity& tau1,
                           const TangentDensity& tau2);

/// Square-root embedding values sqrt(p_i); unit norm under the weighted
/// inner product sum w_i f_i g_i.
std::vector<double> l2_embed(const Density& mu);

/// Weighted L2 inner product and norm on per-node value lists.
double weighted_dot(const std::vector<double>& f, const std::vector<double>& g,
                    const QuadratureMesh& mesh);
double weighted_norm(const std::vector<double>& f, const QuadratureMesh& mesh);

}  // namespace frg

#endif  // FRG_METRIC_HPP_
