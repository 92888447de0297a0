#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "frg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fisher-Rao geometry of discrete probability densities"};
  app.require_subcommand(1);

  frg::cli::RunConfig config;
  config.seed = frg::cli::seed_from_environment();

  const auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--mesh", config.mesh_spec,
                    "mesh spec: two_atom | uniform:N | circle:N | file path");
    cmd->add_option("--density-a", config.density_a, "first density file");
    cmd->add_option("--density-b", config.density_b, "second density file");
    cmd->add_option("--tangent", config.tangent, "tangent file");
    cmd->add_option("--t-grid", config.t_grid,
                    "sample count or explicit comma-separated t values");
    cmd->add_option("--alpha", config.alpha, "power-mean exponent (0 = geometric)");
    cmd->add_option("--delta", config.delta, "mollifier radius in radians");
    cmd->add_option("--sharpness", config.sharpness,
                    "diameter-witness peak concentration");
    cmd->add_option("--out", config.out, "output file");
    cmd->add_option("--tolerance", config.tolerance_scale,
                    "scale factor applied to verification tolerances");
  };

  for (const std::string name :
       {"distance", "geodesic", "mean", "exp", "log", "verify", "mollify",
        "diameter-witness"}) {
    add_common(app.add_subcommand(name));
  }

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();
  return frg::cli::run(config, std::cout, std::cerr);
}
