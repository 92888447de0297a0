#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "frg/geodesics.hpp"
#include "frg/means.hpp"
#include "frg/metric.hpp"
#include "frg/sampling.hpp"

using namespace frg;

namespace {

Density uniform2() { return make_density(build_mesh(MeshKind::two_atom, 2), {1.0, 1.0}); }
Density tilted2() { return make_density(build_mesh(MeshKind::two_atom, 2), {1.6, 0.4}); }
TangentDensity unit2(const Density& base) {
  return make_tangent(base.mesh_ptr(), {1.0, -1.0});
}

const double kLength = 2.0 * std::atan(1.0 / 3.0);  // 0.6435011...

}  // namespace

TEST_CASE("initial value problem follows the closed form 1 +- sin t") {
  const Density mu = uniform2();
  const TangentDensity tau = unit2(mu);

  CHECK(sup_distance(geodesic_ivp(mu, tau, 0.0), mu) == 0.0);

  const Density at_02 = geodesic_ivp(mu, tau, 0.2);
  CHECK(at_02[0] == doctest::Approx(1.0 + std::sin(0.2)).epsilon(1e-15));
  CHECK(at_02[1] == doctest::Approx(1.0 - std::sin(0.2)).epsilon(1e-15));
  CHECK(at_02[0] == doctest::Approx(1.1986693));

  const Density at_length = geodesic_ivp(mu, tau, kLength);
  CHECK(at_length[0] == doctest::Approx(1.6).epsilon(1e-14));
  CHECK(at_length[1] == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("initial value problem rejects rays that leave the space") {
  const MeshPtr mesh =
      build_mesh(MeshKind::two_atom, 2, std::vector<double>{0.3, 0.7});
  const Density mu = make_density(mesh, {1.0, 1.0});
  const TangentDensity tau = make_tangent(mesh, {7.0, -3.0});
  const double speed = fisher_norm(mu, tau);  // sqrt(21)

  CHECK_THROWS_AS(geodesic_ivp(mu, tau, M_PI / speed), std::domain_error);
  // Node 1 crosses zero at speed*t = 2 atan(speed/3) ~ 1.98 < pi.
  CHECK_THROWS_AS(geodesic_ivp(mu, tau, 2.5 / speed), std::domain_error);
  CHECK_NOTHROW(geodesic_ivp(mu, tau, 1.5 / speed));
}

TEST_CASE("boundary value problem worked values") {
  const Density uniform = uniform2();
  const Density tilted = tilted2();

  const GeodesicSegment segment = geodesic_bvp(uniform, tilted);
  CHECK(segment.length() == doctest::Approx(kLength).epsilon(1e-14));
  CHECK(segment.unit_velocity()[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(segment.unit_velocity()[1] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK_FALSE(segment.near_antipodal());

  const Density flipped = make_density(uniform.mesh_ptr(), {0.4, 1.6});
  const GeodesicSegment wide = geodesic_bvp(tilted, flipped);
  CHECK(wide.length() == doctest::Approx(2.0 * std::acos(0.8)).epsilon(1e-13));
  CHECK(wide.unit_velocity()[0] == doctest::Approx(-0.8).epsilon(1e-13));
  CHECK(wide.unit_velocity()[1] == doctest::Approx(0.8).epsilon(1e-13));

  CHECK_THROWS_AS(geodesic_bvp(uniform, uniform), std::invalid_argument);
}

TEST_CASE("boundary value segments reproduce their endpoints") {
  std::mt19937_64 rng(41);
  for (const auto& mesh :
       {build_mesh(MeshKind::two_atom, 2), build_mesh(MeshKind::uniform_atoms, 4),
        build_mesh(MeshKind::circle, 16)}) {
    for (int i = 0; i < 50; ++i) {
      const Density mu = random_density(mesh, rng);
      const Density mu1 = random_density(mesh, rng);
      const GeodesicSegment segment = geodesic_bvp(mu, mu1);
      CHECK(sup_distance(segment.sample(0.0), mu) <= 1e-10);
      CHECK(sup_distance(segment.sample(segment.length()), mu1) <= 1e-10);
    }
  }
}

TEST_CASE("three-term coefficients worked values") {
  const ThreeTermCoefficients at_start = three_term_coeffs(kLength, 0.0);
  CHECK(at_start.a1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at_start.a2 == 0.0);
  CHECK(at_start.a3 == 0.0);

  const ThreeTermCoefficients at_end = three_term_coeffs(kLength, kLength);
  CHECK(at_end.a1 <= 1e-30);
  CHECK(at_end.a2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(at_end.a3) <= 1e-15);

  const ThreeTermCoefficients at_middle = three_term_coeffs(kLength, 0.5 * kLength);
  CHECK(at_middle.a1 == doctest::Approx(0.2565835097474358).epsilon(1e-13));
  CHECK(at_middle.a2 == doctest::Approx(0.2565835097474358).epsilon(1e-13));
  CHECK(at_middle.a3 == doctest::Approx(0.4868329805051375).epsilon(1e-13));
  CHECK(at_middle.sum() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(three_term_coeffs(kLength, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(three_term_coeffs(kLength, kLength + 0.1), std::invalid_argument);
}

TEST_CASE("three-term form equals sampling the boundary problem") {
  const Density uniform = uniform2();
  const Density tilted = tilted2();
  CHECK(sup_distance(geodesic_three_term(uniform, tilted, 0.0), uniform) <= 1e-15);
  CHECK(sup_distance(geodesic_three_term(uniform, tilted, kLength), tilted) <=
        1e-14);

  const Density middle = geodesic_three_term(uniform, tilted, 0.5 * kLength);
  CHECK(middle[0] == doctest::Approx(1.0 + 1.0 / std::sqrt(10.0)).epsilon(1e-13));
  CHECK(middle[1] == doctest::Approx(1.0 - 1.0 / std::sqrt(10.0)).epsilon(1e-13));

  std::mt19937_64 rng(43);
  const MeshPtr mesh = build_mesh(MeshKind::circle, 16);
  for (int i = 0; i < 50; ++i) {
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    const GeodesicSegment segment = geodesic_bvp(mu, mu1);
    for (int j = 0; j <= 32; ++j) {
      const double t = segment.length() * (static_cast<double>(j) / 32.0);
      CHECK(sup_distance(geodesic_three_term(mu, mu1, t), segment.sample(t)) <=
            1e-12);
    }
  }
}

TEST_CASE("segments travel at unit speed") {
  std::mt19937_64 rng(47);
  const MeshPtr mesh = build_mesh(MeshKind::uniform_atoms, 4);
  const double h = 1e-4;
  for (int i = 0; i < 25; ++i) {
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    const GeodesicSegment segment = geodesic_bvp(mu, mu1);
    std::uniform_real_distribution<double> interior(0.1, 0.9);
    const double t = interior(rng) * segment.length();
    const Density at_t = segment.sample(t);
    const Density ahead = segment.sample(t + h);
    const Density behind = segment.sample(t - h);
    std::vector<double> velocity(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) {
      velocity[k] = (ahead[k] - behind[k]) / (2.0 * h);
    }
    const TangentDensity fd(mesh, std::move(velocity));
    CHECK(fisher_norm(at_t, fd) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("midpoint closed form, equidistance and symmetry") {
  const Density uniform = uniform2();
  const Density tilted = tilted2();

  const Density middle = midpoint(uniform, tilted);
  CHECK(middle[0] == doctest::Approx(1.3162278));
  CHECK(middle[1] == doctest::Approx(0.6837722));
  CHECK(sup_distance(middle, geodesic_three_term(uniform, tilted, 0.5 * kLength)) <=
        1e-14);
  CHECK(sup_distance(middle, alpha_power_mean(uniform, tilted, 0.5)) <= 1e-14);

  CHECK(fisher_rao_distance(uniform, middle) ==
        doctest::Approx(0.5 * kLength).epsilon(1e-10));
  CHECK(fisher_rao_distance(middle, tilted) ==
        doctest::Approx(0.5 * kLength).epsilon(1e-10));

  CHECK(sup_distance(midpoint(tilted, uniform), middle) <= 1e-13);
  CHECK_THROWS_AS(midpoint(uniform, uniform), std::invalid_argument);
}

TEST_CASE("exponential map worked values and domain") {
  const Density mu = uniform2();
  const TangentDensity zero = make_tangent(mu.mesh_ptr(), {0.0, 0.0});
  CHECK(sup_distance(exp_map(mu, zero), mu) == 0.0);

  const TangentDensity tau =
      make_tangent(mu.mesh_ptr(), {kLength, -kLength});
  const Density image = exp_map(mu, tau);
  CHECK(image[0] == doctest::Approx(1.6).epsilon(1e-13));
  CHECK(image[1] == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(fisher_rao_distance(mu, image) == doctest::Approx(kLength).epsilon(1e-12));

  const TangentDensity huge = make_tangent(mu.mesh_ptr(), {10.0, -10.0});
  CHECK_THROWS_AS(exp_map(mu, huge), std::domain_error);
}

TEST_CASE("exponential domain membership") {
  const Density mu = uniform2();
  const TangentDensity zero = make_tangent(mu.mesh_ptr(), {0.0, 0.0});
  const TangentDensity unit = unit2(mu);
  const TangentDensity triple = make_tangent(mu.mesh_ptr(), {3.0, -3.0});

  CHECK(exp_domain_contains(mu, zero, M_PI));
  CHECK(exp_domain_contains(mu, unit, M_PI));     // -1 > -cot(1/2) = -1.8305
  CHECK_FALSE(exp_domain_contains(mu, triple, M_PI));  // -3 < -3 cot(3/2)
  CHECK_FALSE(exp_domain_contains(mu, unit, 0.5));
  CHECK_THROWS_AS(exp_domain_contains(mu, unit, 4.0), std::invalid_argument);
}

TEST_CASE("logarithm inverts the exponential") {
  const Density uniform = uniform2();
  const Density tilted = tilted2();

  CHECK(sup_distance(log_map(uniform, uniform).values(), {0.0, 0.0}) == 0.0);
  const TangentDensity tau = log_map(uniform, tilted);
  CHECK(tau[0] == doctest::Approx(kLength).epsilon(1e-13));
  CHECK(tau[1] == doctest::Approx(-kLength).epsilon(1e-13));

  std::mt19937_64 rng(53);
  const MeshPtr mesh = build_mesh(MeshKind::circle, 16);
  for (int i = 0; i < 50; ++i) {
    const Density mu = random_density(mesh, rng);
    const Density mu1 = random_density(mesh, rng);
    CHECK(sup_distance(exp_map(mu, log_map(mu, mu1)), mu1) <= 1e-10);
    CHECK(fisher_norm(mu, log_map(mu, mu1)) ==
          doctest::Approx(fisher_rao_distance(mu, mu1)).epsilon(1e-10));

    const TangentDensity direction = random_unit_tangent(mu, rng);
    std::uniform_real_distribution<double> scale(0.05, 1.5);
    double norm = scale(rng);
    std::vector<double> values = direction.values();
    for (double& v : values) v *= norm;
    TangentDensity candidate(mesh, std::move(values));
    while (!exp_domain_contains(mu, candidate, M_PI)) {
      norm *= 0.5;
      std::vector<double> halved = direction.values();
      for (double& v : halved) v *= norm;
      candidate = TangentDensity(mesh, std::move(halved));
    }
    CHECK(sup_distance(log_map(mu, exp_map(mu, candidate)).values(),
                       candidate.values()) <= 1e-10);
  }
}

TEST_CASE("tangent lines at the endpoints intersect at the geometric mean") {
  const Density uniform = uniform2();
  const Density tilted = tilted2();
  const Density crossing = tangent_line_intersection(uniform, tilted);
  CHECK(crossing[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(crossing[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sup_distance(tangent_line_intersection(tilted, uniform), crossing) <=
        1e-12);
  CHECK_THROWS_AS(tangent_line_intersection(uniform, uniform),
                  std::invalid_argument);

  std::mt19937_64 rng(59);
  for (const auto& mesh :
       {build_mesh(MeshKind::two_atom, 2), build_mesh(MeshKind::uniform_atoms, 4),
        build_mesh(MeshKind::circle, 16)}) {
    for (int i = 0; i < 50; ++i) {
      const Density mu = random_density(mesh, rng);
      const Density mu1 = random_density(mesh, rng);
      CHECK(sup_distance(tangent_line_intersection(mu, mu1),
                         geometric_mean(mu, mu1)) <= 1e-12);
    }
  }
}

TEST_CASE("geodesic equation residual separates true and corrupted curves") {
  const Density uniform = uniform2();
  const Density tilted = tilted2();
  const GeodesicSegment segment = geodesic_bvp(uniform, tilted);
  const double h = 1e-4;

  CHECK(geodesic_ode_residual(segment, 0.5 * segment.length(), h) < 1e-6);

  std::vector<double> scaled = segment.unit_velocity().values();
  for (double& v : scaled) v *= 1.1;
  const TangentDensity corrupted(uniform.mesh_ptr(), std::move(scaled));
  CHECK(geodesic_ode_residual(uniform, corrupted, 0.5 * segment.length(), h) >
        1e-2);

  const TangentDensity zero = make_tangent(uniform.mesh_ptr(), {0.0, 0.0});
  CHECK(geodesic_ode_residual(uniform, zero, 0.3, h) == 0.5);

  CHECK_THROWS_AS(geodesic_ode_residual(segment, 1e-5, h), std::invalid_argument);
}

TEST_CASE("radial and transverse directions stay orthogonal") {
  std::mt19937_64 rng(61);
  const MeshPtr mesh = build_mesh(MeshKind::uniform_atoms, 4);
  for (int i = 0; i < 50; ++i) {
    const Density mu = random_density(mesh, rng);
    const TangentDensity tau = random_unit_tangent(mu, rng);
    const TangentDensity delta = random_orthogonal_unit_tangent(mu, tau, rng);
    std::uniform_real_distribution<double> fraction(0.1, 0.9);
    const double t = fraction(rng) * positivity_breakdown(mu, tau);
    CHECK(std::abs(gauss_orthogonality(mu, tau, delta, t)) < 1e-10);
  }

  const Density mu = uniform2();
  const TangentDensity tau = unit2(mu);
  const TangentDensity zero = make_tangent(mu.mesh_ptr(), {0.0, 0.0});
  CHECK(gauss_orthogonality(mu, tau, zero, 0.5) == 0.0);
  CHECK_THROWS_AS(gauss_orthogonality(mu, tau, tau, 0.5), std::invalid_argument);
  const TangentDensity feeble = make_tangent(mu.mesh_ptr(), {0.5, -0.5});
  CHECK_THROWS_AS(gauss_orthogonality(mu, feeble, zero, 0.5),
                  std::invalid_argument);
}

TEST_CASE("extended geodesics are 2-pi periodic and touch the boundary") {
  const Density mu = uniform2();
  const TangentDensity tau = unit2(mu);

  CHECK(sup_distance(extended_geodesic(mu, tau, 0.0).values(), mu.values()) == 0.0);
  // At pi the curve is (q/p)^2 p, here identically one.
  const NonnegativeDensity at_pi = extended_geodesic(mu, tau, M_PI);
  CHECK(at_pi[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(at_pi[1] == doctest::Approx(1.0).epsilon(1e-13));

  std::mt19937_64 rng(67);
  const MeshPtr mesh = build_mesh(MeshKind::uniform_atoms, 4);
  for (int i = 0; i < 25; ++i) {
    const Density base = random_density(mesh, rng);
    const TangentDensity direction = random_unit_tangent(base, rng);
    std::uniform_real_distribution<double> anywhere(-6.0, 6.0);
    const double t = anywhere(rng);
    CHECK(sup_distance(extended_geodesic(base, direction, t).values(),
                       extended_geodesic(base, direction, t + 2.0 * M_PI).values()) <=
          1e-12);
  }

  // A direction vanishing at a node produces a genuine zero at t = pi.
  const MeshPtr four = build_mesh(MeshKind::uniform_atoms, 4);
  const Density flat = make_density(four, {1.0, 1.0, 1.0, 1.0});
  TangentDensity lopsided = make_tangent(four, {1.0, -1.0, 0.0, 0.0});
  const double norm = fisher_norm(flat, lopsided);
  std::vector<double> unit = lopsided.values();
  for (double& v : unit) v /= norm;
  const NonnegativeDensity boundary =
      extended_geodesic(flat, TangentDensity(four, std::move(unit)), M_PI);
  CHECK(boundary[2] <= 1e-30);  // cos(pi/2) is one ulp above zero
  CHECK(boundary[3] <= 1e-30);
}

TEST_CASE("relaxed antipodal construction on the symmetric pair") {
  const MeshPtr mesh = build_mesh(MeshKind::two_atom, 2);
  const Density mu = make_density(mesh, {1.6, 0.4});
  const Density mu1 = make_density(mesh, {0.4, 1.6});

  const RelaxedAntipodalResult relaxed = relaxed_antipodal(mu, mu1);
  CHECK(std::abs(relaxed.tau1[0]) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(relaxed.tau1[1]) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(relaxed.tau1[0] * relaxed.tau1[1] < 0.0);
  CHECK(sup_distance(relaxed.endpoint, mu1) <= 1e-13);

  const double affinity = hellinger_affinity(mu, mu1);  // cos(l/2) = 0.8
  std::vector<double> velocity(2);
  for (std::size_t i = 0; i < 2; ++i) velocity[i] = affinity * relaxed.tau1[i];
  const TangentDensity scaled(mesh, std::move(velocity));
  CHECK(fisher_norm(mu, scaled) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sup_distance(extended_geodesic(mu, scaled, M_PI).values(), mu1.values()) <=
        1e-13);
}

TEST_CASE("relaxed antipodal fails without an exact half-mass subset") {
  const MeshPtr mesh =
      build_mesh(MeshKind::two_atom, 2, std::vector<double>{0.3, 0.7});
  const Density mu = make_density(mesh, {1.0, 1.0});
  const Density mu1 = make_density(mesh, {2.0, 4.0 / 7.0});
  CHECK_THROWS_AS(relaxed_antipodal(mu, mu1), std::invalid_argument);
}

TEST_CASE("positivity breakdown of a unit ray") {
  const Density mu = uniform2();
  const TangentDensity tau = unit2(mu);
  // q/p = -1 at node 1: breakdown at 2 atan(1) = pi/2.
  CHECK(positivity_breakdown(mu, tau) == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
  const NonnegativeDensity touch =
      extended_geodesic(mu, tau, positivity_breakdown(mu, tau));
  CHECK(touch[1] <= 1e-30);
}

TEST_CASE("segment construction enforces its invariants") {
  const Density mu = uniform2();
  const TangentDensity tau = unit2(mu);
  const TangentDensity feeble = make_tangent(mu.mesh_ptr(), {0.5, -0.5});
  CHECK_THROWS_AS(GeodesicSegment(mu, feeble, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(GeodesicSegment(mu, tau, M_PI), std::invalid_argument);
  CHECK_THROWS_AS(GeodesicSegment(mu, tau, 0.0), std::invalid_argument);
}
