#ifndef FRG_CLI_HPP_
#define FRG_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace frg::cli {

/// Parsed invocation. Commands: distance, geodesic, mean, exp, log, verify,
/// mollify, diameter-witness.
struct RunConfig {
  std::string command;
  std::string mesh_spec;   // two_atom | uniform:N | circle:N | file path
  std::string density_a;
  std::string density_b;
  std::string tangent;
  std::string t_grid;      // point count or explicit comma-separated values
  std::optional<double> alpha;
  std::optional<double> delta;
  std::optional<double> sharpness;
  std::string out;
  double tolerance_scale = 1.0;
  std::uint64_t seed = 42;
};

/// Reads FRG_SEED from the environment, falling back to 42.
std::uint64_t seed_from_environment();

/// Executes one command. Returns 0 on success, 1 on precondition or input
/// failures (message names the offending node or field), 2 when verification
/// checks fail.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace frg::cli

#endif  // FRG_CLI_HPP_
