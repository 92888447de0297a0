#include "frg/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "frg/charts.hpp"
#include "frg/geodesics.hpp"
#include "frg/io.hpp"
#include "frg/means.hpp"
#include "frg/metric.hpp"
#include "frg/sampling.hpp"
#include "frg/smoothing.hpp"
#include "frg/sphere.hpp"

namespace frg {

namespace {

constexpr double kFdStep = 1e-4;

std::vector<MeshPtr> standard_meshes() {
  return {build_mesh(MeshKind::two_atom, 2), build_mesh(MeshKind::uniform_atoms, 4),
          build_mesh(MeshKind::circle, 16)};
}

CheckResult make_result(std::string name, double residual, double tolerance,
                        std::string detail = {}) {
  return {std::move(name), residual <= tolerance, residual, tolerance,
          std::move(detail)};
}

std::vector<double> scaled(const std::vector<double>& values, double factor) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * values[i];
  return out;
}

// Central-difference curve velocity from closed-form samples.
std::vector<double> fd_velocity(const GeodesicSegment& segment, double t) {
  const Density ahead = segment.sample(t + kFdStep);
  const Density behind = segment.sample(t - kFdStep);
  std::vector<double> out(ahead.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (ahead[i] - behind[i]) / (2.0 * kFdStep);
  }
  return out;
}

Density e1_uniform() {
  return make_density(build_mesh(MeshKind::two_atom, 2), {1.0, 1.0});
}

Density e1_tilted() {
  return make_density(build_mesh(MeshKind::two_atom, 2), {1.6, 0.4});
}

// --- criterion 1 -----------------------------------------------------------

std::vector<CheckResult> check_oracle_equivalence(std::uint64_t seed) {
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = standard_meshes();
  double geodesic_gap = 0.0;
  double distance_gap = 0.0;
  for (int pair = 0; pair < 500; ++pair) {
    const MeshPtr& mesh = meshes[pair % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    const double length = fisher_rao_distance(mu, mu1);
    distance_gap =
        std::max(distance_gap, std::abs(length - oracle_distance(mu, mu1)));
    for (int j = 0; j <= 32; ++j) {
      const double t = length * (static_cast<double>(j) / 32.0);
      const Density direct = geodesic_three_term(mu, mu1, t);
      const Density oracle = oracle_geodesic(mu, mu1, t);
      geodesic_gap = std::max(geodesic_gap, sup_distance(direct, oracle));
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  std::ostringstream timing;
  timing << "500 pairs x 33-point grids in " << elapsed << " s";
  return {make_result("criterion 1: geodesic sup gap vs sphere oracle", geodesic_gap, 1e-10,
                      timing.str()),
          make_result("criterion 1: distance gap vs sphere oracle", distance_gap, 1e-14)};
}

// --- criterion 2 -----------------------------------------------------------

CheckResult check_worked_example() {
  const Density mu = e1_uniform();
  const Density mu1 = e1_tilted();
  double worst = 0.0;
  const auto feed = [&worst](double computed, double expected) {
    worst = std::max(worst, std::abs(computed - expected));
  };

  const double affinity = hellinger_affinity(mu, mu1);
  feed(affinity, 0.9486833);
  feed(weighted_dot(embed(mu).coords(), embed(mu1).coords(), mu.mesh()),
       0.9486833);

  const double length = fisher_rao_distance(mu, mu1);
  feed(length, 0.6435011);
  feed(oracle_distance(mu, mu1), 0.6435011);

  const Density mean = geometric_mean(mu, mu1);
  feed(mean[0], 1.3333333);
  feed(mean[1], 0.6666667);
  const Density crossing = tangent_line_intersection(mu, mu1);
  feed(crossing[0], 1.3333333);
  feed(crossing[1], 0.6666667);

  const GeodesicSegment segment = geodesic_bvp(mu, mu1);
  feed(segment.unit_velocity()[0], 1.0);
  feed(segment.unit_velocity()[1], -1.0);
  const TangentDensity logarithm = log_map(mu, mu1);
  feed(logarithm[0] / length, 1.0);
  feed(logarithm[1] / length, -1.0);

  for (int j = 0; j <= 16; ++j) {
    const double t = length * (static_cast<double>(j) / 16.0);
    const Density closed_form = make_density(
        mu.mesh_ptr(), {1.0 + std::sin(t), 1.0 - std::sin(t)});
    feed(sup_distance(geodesic_three_term(mu, mu1, t), closed_form), 0.0);
    feed(sup_distance(oracle_geodesic(mu, mu1, t), closed_form), 0.0);
    feed(sup_distance(segment.sample(t), closed_form), 0.0);
  }
  feed(segment.sample(0.2)[0], 1.1986693);
  feed(segment.sample(0.2)[1], 0.8013307);

  const Density middle = midpoint(mu, mu1);
  feed(middle[0], 1.3162278);
  feed(middle[1], 0.6837722);
  feed(sup_distance(alpha_power_mean(mu, mu1, 0.5), middle), 0.0);
  feed(sup_distance(oracle_geodesic(mu, mu1, 0.5 * length), middle), 0.0);

  return make_result("criterion 2: two-atom worked example, both code paths", worst, 1e-7);
}

// --- criterion 3 -----------------------------------------------------------

std::vector<CheckResult> check_geodesic_structure(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = standard_meshes();
  double simplex_defect = 0.0;
  double negativity = 0.0;
  double velocity_gap = 0.0;
  double midpoint_gap = 0.0;
  double equidistance_gap = 0.0;
  for (int pair = 0; pair < 500; ++pair) {
    const MeshPtr& mesh = meshes[pair % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    const double length = fisher_rao_distance(mu, mu1);
    for (int j = 0; j <= 32; ++j) {
      const ThreeTermCoefficients a =
          three_term_coeffs(length, length * (static_cast<double>(j) / 32.0));
      simplex_defect = std::max(simplex_defect, std::abs(a.sum() - 1.0));
      negativity = std::max({negativity, -a.a1, -a.a2, -a.a3});
    }

    const GeodesicSegment segment = geodesic_bvp(mu, mu1);
    const Density mean = geometric_mean(mu, mu1);
    const double cot_half = 1.0 / std::tan(0.5 * length);
    const std::vector<double> at_start = fd_velocity(segment, 0.0);
    const std::vector<double> at_end = fd_velocity(segment, length);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      velocity_gap = std::max(
          velocity_gap, std::abs(at_start[i] - cot_half * (mean[i] - mu[i])));
      velocity_gap = std::max(
          velocity_gap, std::abs(at_end[i] + cot_half * (mean[i] - mu1[i])));
    }

    const Density middle = midpoint(mu, mu1);
    midpoint_gap = std::max(
        midpoint_gap, sup_distance(middle, alpha_power_mean(mu, mu1, 0.5)));
    midpoint_gap = std::max(
        midpoint_gap, sup_distance(middle, geodesic_three_term(mu, mu1, 0.5 * length)));
    equidistance_gap = std::max(
        equidistance_gap,
        std::abs(fisher_rao_distance(mu, middle) - fisher_rao_distance(middle, mu1)));
    equidistance_gap = std::max(
        equidistance_gap, std::abs(fisher_rao_distance(mu, middle) - 0.5 * length));
  }
  return {make_result("criterion 3: three-term coefficient sum", simplex_defect, 1e-12),
          make_result("criterion 3: three-term coefficient nonnegativity", negativity, 1e-15),
          make_result("criterion 3: endpoint velocities vs finite differences", velocity_gap,
                      1e-6),
          make_result("criterion 3: midpoint = half-power mean = three-term", midpoint_gap,
                      1e-12),
          make_result("criterion 3: midpoint equidistance", equidistance_gap, 1e-10)};
}

// --- criterion 4 -----------------------------------------------------------

CheckResult check_tangent_line(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = standard_meshes();
  double gap = 0.0;
  for (int pair = 0; pair < 200; ++pair) {
    const MeshPtr& mesh = meshes[pair % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    gap = std::max(gap, sup_distance(tangent_line_intersection(mu, mu1),
                                     geometric_mean(mu, mu1)));
  }
  return make_result("criterion 4: tangent-line intersection = geometric mean", gap, 1e-10);
}

// --- criterion 5 -----------------------------------------------------------

std::vector<CheckResult> check_metric_and_exp_log(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = standard_meshes();

  double triangle_defect = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density a = random_density(mesh, rng);
    const Density b = random_density(mesh, rng);
    const Density c = random_density(mesh, rng);
    triangle_defect = std::max(
        triangle_defect, fisher_rao_distance(a, c) - fisher_rao_distance(a, b) -
                             fisher_rao_distance(b, c));
  }

  double round_trip = 0.0;
  for (int i = 0; i < 500; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    round_trip =
        std::max(round_trip, sup_distance(exp_map(mu, log_map(mu, mu1)), mu1));

    TangentDensity direction = random_unit_tangent(mu, rng);
    std::uniform_real_distribution<double> scale(0.05, 2.5);
    double norm = scale(rng);
    TangentDensity tau(mu.mesh_ptr(), scaled(direction.values(), norm));
    while (!exp_domain_contains(mu, tau, M_PI)) {
      norm *= 0.5;
      tau = TangentDensity(mu.mesh_ptr(), scaled(direction.values(), norm));
    }
    const TangentDensity recovered = log_map(mu, exp_map(mu, tau));
    round_trip = std::max(round_trip,
                          sup_distance(recovered.values(), tau.values()));
  }

  double ode_residual = 0.0;
  for (int i = 0; i < 200; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    Density mu = random_density(mesh, rng);
    Density mu1 = random_density(mesh, rng);
    while (fisher_rao_distance(mu, mu1) < 0.01) {
      mu1 = random_density(mesh, rng);
    }
    const GeodesicSegment segment = geodesic_bvp(mu, mu1);
    ode_residual = std::max(
        ode_residual,
        geodesic_ode_residual(segment, 0.5 * segment.length(), kFdStep));
  }

  double gauss_defect = 0.0;
  for (int i = 0; i < 200; ++i) {
    const MeshPtr& mesh = meshes[1 + i % 2];  // tangent spaces of dim >= 2
    const Density mu = random_density(mesh, rng);
    const TangentDensity tau = random_unit_tangent(mu, rng);
    const TangentDensity delta = random_orthogonal_unit_tangent(mu, tau, rng);
    std::uniform_real_distribution<double> fraction(0.1, 0.9);
    const double t = fraction(rng) * positivity_breakdown(mu, tau);
    gauss_defect = std::max(gauss_defect,
                            std::abs(gauss_orthogonality(mu, tau, delta, t)));
  }

  return {make_result("criterion 5: triangle inequality slack", triangle_defect, 1e-12),
          make_result("criterion 5: exp/log round trips", round_trip, 1e-10),
          make_result("criterion 5: geodesic equation residual (h = 1e-4)", ode_residual, 1e-6),
          make_result("criterion 5: radial orthogonality along exponential rays", gauss_defect,
                      1e-10)};
}

// --- criterion 6 -----------------------------------------------------------

CheckResult check_curvature(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = {build_mesh(MeshKind::uniform_atoms, 4),
                                       build_mesh(MeshKind::circle, 16)};
  double residual = 0.0;
  for (int i = 0; i < 200; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density a = random_density(mesh, rng);
    const Density b = random_density(mesh, rng);
    const Density c = random_density(mesh, rng);
    residual = std::max(residual, spherical_triangle_residual(a, b, c));
  }
  return make_result("criterion 6: curvature-1/4 law of cosines", residual, 1e-8);
}

// --- criterion 7 -----------------------------------------------------------

std::vector<CheckResult> check_diameter(std::uint64_t seed) {
  const MeshPtr circle = build_mesh(MeshKind::circle, 64);
  const DiameterWitness witness = diameter_witness(circle, 14.6);
  double min_value = std::numeric_limits<double>::infinity();
  for (const double v : witness.mu.values()) min_value = std::min(min_value, v);
  for (const double v : witness.mu1.values()) min_value = std::min(min_value, v);

  // Every distance evaluation must stay strictly below pi; sweep witnesses
  // of growing sharpness and random pairs across meshes.
  std::mt19937_64 rng(seed);
  double max_distance = witness.distance;
  double previous = 0.0;
  bool monotone = true;
  for (const double sharpness : {0.01, 1.0, 5.0, 10.0, 20.0, 40.0}) {
    const double d = diameter_witness(circle, sharpness).distance;
    monotone = monotone && d > previous;
    previous = d;
    max_distance = std::max(max_distance, d);
  }
  const std::vector<MeshPtr> meshes = standard_meshes();
  for (int i = 0; i < 2000; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    max_distance = std::max(max_distance,
                            fisher_rao_distance(random_density(mesh, rng),
                                                random_density(mesh, rng)));
  }

  std::ostringstream detail;
  detail << "witness distance " << format_number(witness.distance)
         << ", density floor " << format_number(min_value)
         << (monotone ? ", sharpness sweep monotone" : ", SWEEP NOT MONOTONE");
  std::vector<CheckResult> results;
  results.push_back(make_result("criterion 7: diameter witness reaches pi - 0.05",
                                (M_PI - 0.05) - witness.distance, 0.0,
                                detail.str()));
  results.back().pass =
      results.back().pass && min_value > 0.0 && monotone;
  results.push_back(make_result("criterion 7: distances stay below pi",
                                max_distance - M_PI, -1e-18));
  return results;
}

// --- criterion 8 -----------------------------------------------------------

std::vector<CheckResult> check_continuity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = standard_meshes();

  double gap_defect = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    const Density mu_p = random_density(mesh, rng);
    const Density mu1_p = random_density(mesh, rng);
    const InequalityGap ell_gap = ell_continuity_gap(mu, mu1, mu_p, mu1_p);
    const InequalityGap phi_gap = phi_continuity_gap(mu, mu1, mu_p, mu1_p);
    gap_defect = std::max({gap_defect, ell_gap.lhs - ell_gap.rhs,
                           phi_gap.lhs - phi_gap.rhs});
  }

  int ball_mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    std::uniform_real_distribution<double> radius(0.05, M_PI - 0.05);
    const double eps = radius(rng);
    const bool by_distance = fisher_rao_distance(mu, mu1) < eps;
    const bool by_l2 = hellinger_distance(mu, mu1) <
                       std::sqrt(2.0 * (1.0 - std::cos(0.5 * eps)));
    if (by_distance != by_l2) ++ball_mismatches;
  }

  double small_ball = 0.0;
  constexpr double kBallRadius = 0.2;
  for (int i = 0; i < 1000; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density_in_ball(mu, kBallRadius, rng);
    const Density mu2 = random_density_in_ball(mu, kBallRadius, rng);
    small_ball = std::max(small_ball, fisher_rao_distance(mu1, mu2));
  }

  return {make_result("criterion 8: continuity bounds lhs <= rhs", gap_defect, 0.0),
          make_result("criterion 8: metric ball = weighted-L2 ball",
                      static_cast<double>(ball_mismatches), 0.0),
          make_result("criterion 8: pairs in a 0.2-ball stay within 0.8",
                      small_ball - 4.0 * kBallRadius, 0.0)};
}

// --- criterion 9 -----------------------------------------------------------

std::vector<CheckResult> check_charts(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<MeshPtr> meshes = standard_meshes();
  std::normal_distribution<double> gaussian(0.0, 0.4);

  const auto random_coordinates = [&](const Density& base) {
    std::vector<double> raw(base.size());
    for (double& v : raw) v = gaussian(rng);
    return centered_chart_vector(base, std::move(raw));
  };

  double round_trip = 0.0;
  for (int i = 0; i < 500; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density base = random_density(mesh, rng);
    const Density nu = random_density(mesh, rng);
    round_trip = std::max(
        round_trip, sup_distance(chart_inverse(chart_forward(base, nu)), nu));
    const ChartVector u = random_coordinates(base);
    round_trip = std::max(
        round_trip, sup_distance(chart_forward(base, chart_inverse(u)).values(),
                                 u.values()));
  }

  double transition_gap = 0.0;
  for (int i = 0; i < 200; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density base0 = random_density(mesh, rng);
    const Density base1 = random_density(mesh, rng);
    const Density base2 = random_density(mesh, rng);
    const ChartVector u = random_coordinates(base0);
    const ChartVector through = chart_transition(chart_transition(u, base1), base2);
    const ChartVector direct = chart_transition(u, base2);
    transition_gap =
        std::max(transition_gap, sup_distance(through.values(), direct.values()));
    transition_gap = std::max(
        transition_gap,
        sup_distance(chart_inverse(chart_transition(u, base1)), chart_inverse(u)));
  }

  double covariance_gap = 0.0;
  for (int i = 0; i < 500; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density mu = random_density(mesh, rng);
    const TangentDensity tau1 = random_tangent(mesh, rng);
    const TangentDensity tau2 = random_tangent(mesh, rng);
    covariance_gap = std::max(
        covariance_gap,
        std::abs(covariance_metric(mu, radon_nikodym(tau1, mu),
                                   radon_nikodym(tau2, mu)) -
                 fisher_inner(mu, tau1, tau2)));
  }

  double mean_in_coords_gap = 0.0;
  for (int i = 0; i < 200; ++i) {
    const MeshPtr& mesh = meshes[i % meshes.size()];
    const Density base = random_density(mesh, rng);
    const Density base_p = random_density(mesh, rng);
    const ChartVector u = random_coordinates(base);
    const ChartVector u_p = random_coordinates(base_p);
    const Density mean_of_bases = geometric_mean(base, base_p);
    const ChartVector composite = geometric_mean_in_coords(u, u_p, mean_of_bases);
    mean_in_coords_gap = std::max(
        mean_in_coords_gap,
        sup_distance(chart_inverse(composite),
                     geometric_mean(chart_inverse(u), chart_inverse(u_p))));
  }

  return {make_result("criterion 9: chart round trips", round_trip, 1e-12),
          make_result("criterion 9: chart transition composition", transition_gap, 1e-12),
          make_result("criterion 9: covariance form of the metric", covariance_gap, 1e-12),
          make_result("criterion 9: geometric mean in coordinates", mean_in_coords_gap, 1e-12)};
}

// --- criterion 10 ----------------------------------------------------------

CheckResult check_relaxed_antipodal() {
  const MeshPtr mesh = build_mesh(MeshKind::two_atom, 2);
  const Density mu = make_density(mesh, {1.6, 0.4});
  const Density mu1 = make_density(mesh, {0.4, 1.6});
  const RelaxedAntipodalResult relaxed = relaxed_antipodal(mu, mu1);
  const double affinity = hellinger_affinity(mu, mu1);

  double worst = sup_distance(relaxed.endpoint, mu1);
  const TangentDensity velocity(mesh, scaled(relaxed.tau1, affinity));
  worst = std::max(worst, std::abs(fisher_norm(mu, velocity) - 1.0));
  worst = std::max(worst, std::abs(total_mass(velocity)));
  worst = std::max(
      worst,
      sup_distance(extended_geodesic(mu, velocity, M_PI).values(), mu1.values()));
  return make_result("criterion 10: relaxed antipodal geodesic at pi", worst, 1e-12);
}

// --- criterion 11 ----------------------------------------------------------

std::vector<CheckResult> check_mollifier(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const MeshPtr circle = build_mesh(MeshKind::circle, 256);

  double invariant_defect = 0.0;
  double oscillation_growth = -std::numeric_limits<double>::infinity();
  for (const double delta : {0.1, 0.3, 0.8}) {
    const BumpKernel kernel = make_kernel(circle, delta);
    for (int i = 0; i < 20; ++i) {
      const Density p = random_density(circle, rng, 0.8);
      const Density smoothed = mollify(p, kernel);
      invariant_defect =
          std::max(invariant_defect, std::abs(total_mass(smoothed) - 1.0));
      double low = std::numeric_limits<double>::infinity();
      double high = 0.0;
      double low0 = std::numeric_limits<double>::infinity();
      double high0 = 0.0;
      for (std::size_t k = 0; k < smoothed.size(); ++k) {
        low = std::min(low, smoothed[k]);
        high = std::max(high, smoothed[k]);
        low0 = std::min(low0, p[k]);
        high0 = std::max(high0, p[k]);
      }
      if (!(low > 0.0)) invariant_defect = std::max(invariant_defect, 1.0);
      oscillation_growth =
          std::max(oscillation_growth, (high - low) - (high0 - low0));
    }
  }

  // Fixed sinusoidal test density 1 + sin(theta)/2, Lipschitz constant 1/2.
  std::vector<double> sinusoid(circle->size());
  for (std::size_t k = 0; k < sinusoid.size(); ++k) {
    sinusoid[k] = 1.0 + 0.5 * std::sin(circle->positions()[k]);
  }
  const Density lipschitz = make_density(circle, std::move(sinusoid),
                                         /*normalize=*/true);
  double previous = std::numeric_limits<double>::infinity();
  bool shrinking = true;
  for (const double delta : {0.2, 0.1, 0.049}) {
    const double gap =
        sup_distance(mollify(lipschitz, make_kernel(circle, delta)), lipschitz);
    shrinking = shrinking && gap < previous;
    previous = gap;
  }
  std::ostringstream detail;
  detail << "sup gap " << format_number(previous) << " at delta 0.049"
         << (shrinking ? ", shrinking with delta" : ", NOT SHRINKING");

  std::vector<CheckResult> results;
  results.push_back(make_result("criterion 11: mollifier mass/positivity/oscillation",
                                std::max(invariant_defect, oscillation_growth),
                                1e-12));
  results.push_back(
      make_result("criterion 11: sinusoid within 0.01 at delta < 0.05", previous, 0.01,
                  detail.str()));
  results.back().pass = results.back().pass && shrinking;
  return results;
}

}  // namespace

std::vector<CheckResult> acceptance_suite(std::uint64_t seed) {
  std::vector<CheckResult> results;
  const auto append = [&results](std::vector<CheckResult> block) {
    for (auto& r : block) results.push_back(std::move(r));
  };
  append(check_oracle_equivalence(seed));
  results.push_back(check_worked_example());
  append(check_geodesic_structure(seed + 1));
  results.push_back(check_tangent_line(seed + 2));
  append(check_metric_and_exp_log(seed + 3));
  results.push_back(check_curvature(seed + 4));
  append(check_diameter(seed + 5));
  append(check_continuity(seed + 6));
  append(check_charts(seed + 7));
  results.push_back(check_relaxed_antipodal());
  append(check_mollifier(seed + 8));
  return results;
}

std::vector<CheckResult> verify_pair(const Density& a, const Density& b,
                                     std::uint64_t seed, double tolerance_scale) {
  require_same_mesh(a.mesh(), b.mesh(), "verify");
  std::mt19937_64 rng(seed);
  const MeshPtr& mesh = a.mesh_ptr();
  std::vector<CheckResult> results;
  const auto push = [&](std::string name, double residual, double tolerance,
                        std::string detail = {}) {
    results.push_back(make_result(std::move(name), residual,
                                  tolerance * tolerance_scale, std::move(detail)));
  };

  push("input masses", std::max(std::abs(total_mass(a) - 1.0),
                                std::abs(total_mass(b) - 1.0)),
       1e-10);

  const double affinity = hellinger_affinity(a, b);
  push("affinity symmetry and bound",
       std::max(std::abs(affinity - hellinger_affinity(b, a)), affinity - 1.0),
       1e-15);
  const double squared = hellinger_distance(a, b) * hellinger_distance(a, b);
  push("hellinger identity d^2 = 2(1 - affinity)",
       std::abs(squared - 2.0 * (1.0 - affinity)), 1e-12);

  const TangentDensity tau1 = random_tangent(mesh, rng);
  const TangentDensity tau2 = random_tangent(mesh, rng);
  const std::vector<double> root = l2_embed(a);
  std::vector<double> push1(a.size());
  std::vector<double> push2(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    push1[i] = tau1[i] / (2.0 * root[i]);
    push2[i] = tau2[i] / (2.0 * root[i]);
  }
  push("embedding pulls back a quarter of the metric",
       std::abs(4.0 * weighted_dot(push1, push2, a.mesh()) -
                fisher_inner(a, tau1, tau2)),
       1e-12);
  push("connection output is tangent",
       std::abs(total_mass(levi_civita(a, tau1, tau2))), 1e-10);
  push("covariance form of the metric",
       std::abs(covariance_metric(a, radon_nikodym(tau1, a),
                                  radon_nikodym(tau2, a)) -
                fisher_inner(a, tau1, tau2)),
       1e-12);

  const double distance = fisher_rao_distance(a, b);
  push("distance below pi", distance - M_PI, -1e-18);
  push("oracle distance agreement",
       std::abs(distance - oracle_distance(a, b)), 1e-14);

  if (sup_distance(a, b) > 1e-12) {
    const GeodesicSegment segment = geodesic_bvp(a, b);
    push("segment endpoints",
         std::max(sup_distance(segment.sample(0.0), a),
                  sup_distance(segment.sample(segment.length()), b)),
         1e-10);
    double oracle_gap = 0.0;
    double simplex_defect = 0.0;
    for (int j = 0; j <= 32; ++j) {
      const double t = distance * (static_cast<double>(j) / 32.0);
      oracle_gap = std::max(oracle_gap,
                            sup_distance(geodesic_three_term(a, b, t),
                                         oracle_geodesic(a, b, t)));
      const ThreeTermCoefficients coeffs = three_term_coeffs(distance, t);
      simplex_defect =
          std::max({simplex_defect, std::abs(coeffs.sum() - 1.0), -coeffs.a1,
                    -coeffs.a2, -coeffs.a3});
    }
    push("three-term form matches the sphere oracle", oracle_gap, 1e-10);
    push("coefficients form a simplex", simplex_defect, 1e-12);

    const Density middle = midpoint(a, b);
    push("midpoint = half-power mean",
         sup_distance(middle, alpha_power_mean(a, b, 0.5)), 1e-12);
    push("midpoint equidistance",
         std::abs(fisher_rao_distance(a, middle) -
                  fisher_rao_distance(middle, b)),
         1e-10);
    push("tangent lines meet at the geometric mean",
         sup_distance(tangent_line_intersection(a, b), geometric_mean(a, b)),
         1e-10);
    push("exp of log reproduces the target",
         sup_distance(exp_map(a, log_map(a, b)), b), 1e-10);
    if (distance > 0.01) {
      push("geodesic equation residual",
           geodesic_ode_residual(segment, 0.5 * distance, kFdStep), 1e-6);
    }
  }

  push("chart round trip",
       sup_distance(chart_inverse(chart_forward(a, b)), b), 1e-12);

  const Density perturbed_a = random_density_in_ball(a, 0.1, rng);
  const Density perturbed_b = random_density_in_ball(b, 0.1, rng);
  const InequalityGap ell_gap = ell_continuity_gap(a, b, perturbed_a, perturbed_b);
  const InequalityGap phi_gap = phi_continuity_gap(a, b, perturbed_a, perturbed_b);
  push("continuity bounds on perturbed inputs",
       std::max(ell_gap.lhs - ell_gap.rhs, phi_gap.lhs - phi_gap.rhs), 0.0);

  if (mesh->has_positions() && mesh->size() >= 8) {
    const double spacing = 2.0 * M_PI / static_cast<double>(mesh->size());
    const BumpKernel kernel = make_kernel(mesh, std::min(2.5 * spacing, 0.5));
    const Density smoothed = mollify(a, kernel);
    double low = std::numeric_limits<double>::infinity();
    for (const double v : smoothed.values()) low = std::min(low, v);
    push("mollifier preserves mass and positivity",
         std::max(std::abs(total_mass(smoothed) - 1.0), low > 0.0 ? 0.0 : 1.0),
         1e-12);
    const Density smoothed_b = mollify(b, kernel);
    const InequalityGap stability = ell_continuity_gap(a, b, smoothed, smoothed_b);
    push("mollified endpoints obey the distance bound",
         stability.lhs - stability.rhs, 0.0);
  }

  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": residual "
        << format_number(r.residual) << " vs tolerance "
        << format_number(r.tolerance);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace frg
