#include "frg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "frg/geodesics.hpp"
#include "frg/io.hpp"
#include "frg/means.hpp"
#include "frg/metric.hpp"
#include "frg/smoothing.hpp"
#include "frg/sphere.hpp"
#include "frg/verification.hpp"

namespace frg::cli {

namespace {

MeshPtr parse_mesh_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("--mesh is required");
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "two_atom" || head == "uniform" || head == "circle") {
    std::size_t n = 2;
    if (colon != std::string::npos) {
      n = static_cast<std::size_t>(std::stoul(spec.substr(colon + 1)));
    } else if (head != "two_atom") {
      throw std::invalid_argument("mesh spec '" + spec + "' needs a node count");
    }
    return build_mesh(mesh_kind_from_string(head), n);
  }
  return read_density_file(spec).mesh;  // a density/mesh file path
}

std::vector<double> parse_t_grid(const std::string& spec, double length) {
  std::vector<double> grid;
  if (spec.find(',') == std::string::npos) {
    const std::size_t count = spec.empty() ? 33 : std::stoul(spec);
    if (count < 2) throw std::invalid_argument("--t-grid needs at least 2 points");
    grid.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      grid.push_back(length * (static_cast<double>(j) /
                               static_cast<double>(count - 1)));
    }
    return grid;
  }
  std::istringstream stream(spec);
  std::string field;
  while (std::getline(stream, field, ',')) grid.push_back(std::stod(field));
  for (const double t : grid) {
    if (t < -1e-12 || t > length + 1e-12) {
      throw std::invalid_argument("t-grid point " + format_number(t) +
                                  " outside [0, " + format_number(length) + "]");
    }
  }
  return grid;
}

void write_or_print(const std::string& path, const std::string& content,
                    std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << content;
}

std::pair<Density, Density> load_pair(const RunConfig& config) {
  if (config.density_a.empty() || config.density_b.empty()) {
    throw std::invalid_argument("--density-a and --density-b are required");
  }
  Density a = read_density(config.density_a);
  Density b = read_density(config.density_b);
  require_same_mesh(a.mesh(), b.mesh(), "input pair");
  // Rebind b to a's mesh object so downstream checks share one quadrature.
  return {a, Density(a.mesh_ptr(), b.values())};
}

int run_distance(const RunConfig& config, std::ostream& out) {
  const auto [a, b] = load_pair(config);
  std::string report =
      "{\"ell\": " + format_number(fisher_rao_distance(a, b)) +
      ", \"hellinger_affinity\": " + format_number(hellinger_affinity(a, b)) +
      ", \"hellinger_distance\": " + format_number(hellinger_distance(a, b)) +
      "}\n";
  write_or_print(config.out, report, out);
  return 0;
}

int run_geodesic(const RunConfig& config, std::ostream& out) {
  const auto [a, b] = load_pair(config);
  const double length = fisher_rao_distance(a, b);
  const std::vector<double> grid = parse_t_grid(config.t_grid, length);
  std::vector<std::vector<double>> rows;
  rows.reserve(grid.size());
  for (const double t : grid) {
    rows.push_back(geodesic_three_term(a, b, std::clamp(t, 0.0, length)).values());
  }
  if (config.out.empty()) {
    throw std::invalid_argument("geodesic requires --out for the CSV table");
  }
  write_sample_csv(config.out, grid, rows);
  out << "wrote " << grid.size() << " samples to " << config.out << '\n';
  return 0;
}

int run_mean(const RunConfig& config, std::ostream& out) {
  const auto [a, b] = load_pair(config);
  const Density mean = config.alpha && *config.alpha != 0.0
                           ? alpha_power_mean(a, b, *config.alpha)
                           : geometric_mean(a, b);
  write_or_print(config.out, density_to_json(mean.mesh_ptr(), mean.values()), out);
  return 0;
}

int run_exp(const RunConfig& config, std::ostream& out) {
  if (config.density_a.empty() || config.tangent.empty()) {
    throw std::invalid_argument("exp requires --density-a and --tangent");
  }
  const Density base = read_density(config.density_a);
  TangentDensity tau = read_tangent(config.tangent);
  require_same_mesh(base.mesh(), tau.mesh(), "exp inputs");
  tau = TangentDensity(base.mesh_ptr(), tau.values());
  const Density image = exp_map(base, tau);
  write_or_print(config.out, density_to_json(image.mesh_ptr(), image.values()),
                 out);
  return 0;
}

int run_log(const RunConfig& config, std::ostream& out) {
  const auto [a, b] = load_pair(config);
  const TangentDensity tau = log_map(a, b);
  write_or_print(config.out, density_to_json(tau.mesh_ptr(), tau.values()), out);
  return 0;
}

int run_mollify(const RunConfig& config, std::ostream& out) {
  if (config.density_a.empty()) {
    throw std::invalid_argument("mollify requires --density-a");
  }
  if (!config.delta) throw std::invalid_argument("mollify requires --delta");
  const Density p = read_density(config.density_a);
  const BumpKernel kernel = make_kernel(p.mesh_ptr(), *config.delta);
  const MollifyResult result = mollify_detailed(p, kernel);
  write_or_print(config.out,
                 density_to_json(result.density.mesh_ptr(),
                                 result.density.values()),
                 out);
  out << "renormalizer " << format_number(result.renormalizer) << '\n';
  return 0;
}

int run_diameter_witness(const RunConfig& config, std::ostream& out) {
  const MeshPtr mesh = parse_mesh_spec(config.mesh_spec);
  const double sharpness = config.sharpness.value_or(14.6);
  const DiameterWitness witness = diameter_witness(mesh, sharpness);
  out << "{\"ell\": " << format_number(witness.distance)
      << ", \"sharpness\": " << format_number(sharpness) << "}\n";
  if (!config.out.empty()) {
    write_density(config.out, witness.mu);
  }
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  std::vector<CheckResult> results;
  if (!config.density_a.empty() || !config.density_b.empty()) {
    const auto [a, b] = load_pair(config);
    results = verify_pair(a, b, config.seed, config.tolerance_scale);
  }
  std::vector<CheckResult> suite = acceptance_suite(config.seed);
  for (auto& r : suite) results.push_back(std::move(r));
  out << format_report(results);
  if (!all_pass(results)) {
    out << "verification FAILED\n";
    return 2;
  }
  out << "all checks passed\n";
  return 0;
}

}  // namespace

std::uint64_t seed_from_environment() {
  if (const char* raw = std::getenv("FRG_SEED")) {
    return std::strtoull(raw, nullptr, 10);
  }
  return 42;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "distance") return run_distance(config, out);
    if (config.command == "geodesic") return run_geodesic(config, out);
    if (config.command == "mean") return run_mean(config, out);
    if (config.command == "exp") return run_exp(config, out);
    if (config.command == "log") return run_log(config, out);
    if (config.command == "verify") return run_verify(config, out);
    if (config.command == "mollify") return run_mollify(config, out);
    if (config.command == "diameter-witness") {
      return run_diameter_witness(config, out);
    }
    err << "unknown command '" << config.command << "'\n";
    return 1;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return 1;
  }
}

}  // namespace frg::cli
