#ifndef FRG_SAMPLING_HPP_
#define FRG_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "frg/measure.hpp"

namespace frg {

/// Log-normal-shaped random density: exp(spread * gaussian) per node,
/// normalized. Spread 0.5 keeps density ratios moderate so derivative-based
/// checks stay well conditioned.
Density random_density(const MeshPtr& mesh, std::mt19937_64& rng,
                       double spread = 0.5);

/// Centered gaussian tangent values.
TangentDensity random_tangent(const MeshPtr& mesh, std::mt19937_64& rng);

/// Random tangent normalized to unit Fisher norm at mu.
TangentDensity random_unit_tangent(const Density& mu, std::mt19937_64& rng);

/// Unit tangent Fisher-orthogonal to a given unit direction; requires at
/// least 3 nodes.
TangentDensity random_orthogonal_unit_tangent(const Density& mu,
                                              const TangentDensity& direction,
                                              std::mt19937_64& rng);

/// Random density at Fisher-Rao distance below radius from mu.
Density random_density_in_ball(const Density& mu, double radius,
                               std::mt19937_64& rng);

}  // namespace frg

#endif  // FRG_SAMPLING_HPP_
