#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "frg/charts.hpp"
#include "frg/means.hpp"
#include "frg/metric.hpp"
#include "frg/sampling.hpp"

using namespace frg;

namespace {

Density uniform2() { return make_density(build_mesh(MeshKind::two_atom, 2), {1.0, 1.0}); }
Density tilted2() { return make_density(build_mesh(MeshKind::two_atom, 2), {1.6, 0.4}); }

ChartVector random_chart_vector(const Density& base, std::mt19937_64& rng,
                                double scale = 0.4) {
  std::normal_distribution<double> gaussian(0.0, scale);
  std::vector<double> raw(base.size());
  for (double& v : raw) v = gaussian(rng);
  return centered_chart_vector(base, std::move(raw));
}

}  // namespace

TEST_CASE("chart vectors must be centered") {
  const Density base = uniform2();
  CHECK_NOTHROW(ChartVector(base, {1.0, -1.0}));
  CHECK_THROWS_AS(ChartVector(base, {1.0, 0.0}), std::invalid_argument);
  const ChartVector centered = centered_chart_vector(base, {2.0, 0.0});
  CHECK(centered[0] == doctest::Approx(1.0));
  CHECK(centered[1] == doctest::Approx(-1.0));
}

TEST_CASE("chart maps worked values") {
  const Density base = uniform2();
  const ChartVector zero(base, {0.0, 0.0});
  CHECK(sup_distance(chart_inverse(zero), base) == 0.0);

  const double log2 = std::log(2.0);
  const ChartVector coordinates(base, {log2, -log2});
  const Density image = chart_inverse(coordinates);
  CHECK(image[0] == doctest::Approx(1.6).epsilon(1e-14));
  CHECK(image[1] == doctest::Approx(0.4).epsilon(1e-14));

  const ChartVector recovered = chart_forward(base, tilted2());
  CHECK(recovered[0] == doctest::Approx(log2).epsilon(1e-14));
  CHECK(recovered[1] == doctest::Approx(-log2).epsilon(1e-14));

  const ChartVector self = chart_forward(base, base);
  CHECK(sup_distance(self.values(), {0.0, 0.0}) == 0.0);

  const ChartVector overflowing(base, {800.0, -800.0});
  CHECK_THROWS_AS(chart_inverse(overflowing), std::domain_error);
}

TEST_CASE("chart maps are mutually inverse") {
  std::mt19937_64 rng(89);
  for (const auto& mesh : {build_mesh(MeshKind::uniform_atoms, 4),
                           build_mesh(MeshKind::circle, 16)}) {
    for (int i = 0; i < 50; ++i) {
      const Density base = random_density(mesh, rng);
      const Density target = random_density(mesh, rng);
      CHECK(sup_distance(chart_inverse(chart_forward(base, target)), target) <=
            1e-12);
      const ChartVector u = random_chart_vector(base, rng);
      CHECK(sup_distance(chart_forward(base, chart_inverse(u)).values(),
                         u.values()) <= 1e-12);
    }
  }
}

TEST_CASE("chart transitions are consistent") {
  std::mt19937_64 rng(97);
  const MeshPtr mesh = build_mesh(MeshKind::uniform_atoms, 4);
  for (int i = 0; i < 50; ++i) {
    const Density base0 = random_density(mesh, rng);
    const Density base1 = random_density(mesh, rng);
    const Density base2 = random_density(mesh, rng);
    const ChartVector u = random_chart_vector(base0, rng);

    // Identity transition.
    CHECK(sup_distance(chart_transition(u, base0).values(), u.values()) <= 1e-13);
    // The represented density is chart-independent.
    CHECK(sup_distance(chart_inverse(chart_transition(u, base1)),
                       chart_inverse(u)) <= 1e-12);
    // Transitions compose.
    CHECK(sup_distance(
              chart_transition(chart_transition(u, base1), base2).values(),
              chart_transition(u, base2).values()) <= 1e-12);
    // Transporting the origin lands on the old base's coordinates.
    const ChartVector origin(base0, std::vector<double>(base0.size(), 0.0));
    CHECK(sup_distance(chart_transition(origin, base1).values(),
                       chart_forward(base1, base0).values()) <= 1e-12);
  }
}

TEST_CASE("covariance representation of the metric") {
  const Density uniform = uniform2();
  CHECK(covariance_metric(uniform, {3.0, 3.0}, {1.0, -1.0}) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(covariance_metric(uniform, {1.0, -1.0}, {1.0, -1.0}) ==
        doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937_64 rng(101);
  const MeshPtr mesh = build_mesh(MeshKind::circle, 16);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const Density mu = random_density(mesh, rng);
    const TangentDensity tau1 = random_tangent(mesh, rng);
    const TangentDensity tau2 = random_tangent(mesh, rng);
    const std::vector<double> v1 = radon_nikodym(tau1, mu);
    const std::vector<double> v2 = radon_nikodym(tau2, mu);
    const double metric = fisher_inner(mu, tau1, tau2);
    CHECK(covariance_metric(mu, v1, v2) ==
          doctest::Approx(metric).epsilon(1e-12).scale(1.0));

    // Adding constants to either argument changes nothing.
    std::vector<double> shifted = v1;
    const double constant = shift(rng);
    for (double& v : shifted) v += constant;
    CHECK(covariance_metric(mu, shifted, v2) ==
          doctest::Approx(metric).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("geometric mean in chart coordinates") {
  std::mt19937_64 rng(103);
  const MeshPtr mesh = build_mesh(MeshKind::uniform_atoms, 4);
  for (int i = 0; i < 50; ++i) {
    const Density base = random_density(mesh, rng);
    const Density base_p = random_density(mesh, rng);
    const Density between = geometric_mean(base, base_p);
    const ChartVector u = random_chart_vector(base, rng, 0.3);
    const ChartVector u_p = random_chart_vector(base_p, rng, 0.3);

    const ChartVector combined = geometric_mean_in_coords(u, u_p, between);
    CHECK(sup_distance(chart_inverse(combined),
                       geometric_mean(chart_inverse(u), chart_inverse(u_p))) <=
          1e-12);
    // Swapping the charts gives the same vector.
    const ChartVector swapped = geometric_mean_in_coords(u_p, u, between);
    CHECK(sup_distance(swapped.values(), combined.values()) <= 1e-13);
  }

  // Zero coordinates land back on the geometric mean of the bases.
  const Density base = uniform2();
  const Density base_p = tilted2();
  const Density between = geometric_mean(base, base_p);
  const ChartVector zero(base, {0.0, 0.0});
  const ChartVector zero_p(base_p, {0.0, 0.0});
  const ChartVector at_mean = geometric_mean_in_coords(zero, zero_p, between);
  CHECK(sup_distance(chart_inverse(at_mean), between) <= 1e-13);

  CHECK_THROWS_AS(geometric_mean_in_coords(zero, zero_p, base),
                  std::invalid_argument);
}

TEST_CASE("mixture arc bounds straddle one") {
  const Density tilted = tilted2();
  const Density flipped = make_density(tilted.mesh_ptr(), {0.4, 1.6});

  const auto [same_low, same_high] = mixture_arc_bounds(tilted, tilted);
  CHECK(same_low == 1.0);
  CHECK(same_high == 1.0);

  const auto [low, high] = mixture_arc_bounds(tilted, flipped);
  CHECK(low == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(high == doctest::Approx(4.0).epsilon(1e-15));

  std::mt19937_64 rng(107);
  const MeshPtr mesh = build_mesh(MeshKind::circle, 16);
  for (int i = 0; i < 50; ++i) {
    const auto [c1, c2] = mixture_arc_bounds(random_density(mesh, rng),
                                             random_density(mesh, rng));
    CHECK(c1 <= 1.0);
    CHECK(c2 >= 1.0);
    CHECK(c1 > 0.0);
    CHECK(std::isfinite(c2));
  }
}

TEST_CASE("positivity radius of a straight line") {
  const Density tilted = tilted2();
  const TangentDensity zero = make_tangent(tilted.mesh_ptr(), {0.0, 0.0});
  CHECK(positivity_radius(tilted, zero) ==
        std::numeric_limits<double>::infinity());

  const TangentDensity tau = make_tangent(tilted.mesh_ptr(), {1.0, -1.0});
  const double radius = positivity_radius(tilted, tau);
  CHECK(radius == doctest::Approx(0.4).epsilon(1e-15));

  // Half a radius along the line is still a valid density.
  std::vector<double> inside(tilted.size());
  for (std::size_t i = 0; i < inside.size(); ++i) {
    inside[i] = tilted[i] + 0.5 * radius * tau[i];
  }
  CHECK_NOTHROW(Density(tilted.mesh_ptr(), std::move(inside)));
}
