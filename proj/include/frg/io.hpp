#ifndef FRG_IO_HPP_
#define FRG_IO_HPP_

#include <string>
#include <vector>

#include "frg/measure.hpp"

namespace frg {

/// Fixed 9-significant-digit scientific formatting; identical inputs map to
/// identical bytes across runs.
std::string format_number(double value);

struct DensityFile {
  MeshPtr mesh;
  std::vector<double> values;
};

/// Reads a density or tangent file. JSON schema:
///   { "mesh": {"kind": "...", "n": N, "weights": [...], "positions": [...]},
///     "values": [...] }
/// CSV alternative: optional "weight,value" header, then one row per node.
DensityFile read_density_file(const std::string& path);

Density read_density(const std::string& path);
TangentDensity read_tangent(const std::string& path);

/// Writers choose JSON or CSV from the file extension (.csv means CSV);
/// field order and number formatting are fixed.
void write_density(const std::string& path, const Density& density);
void write_tangent(const std::string& path, const TangentDensity& tangent);

/// CSV table of geodesic samples: header t,v0,...,v{n-1}, one row per grid
/// point.
void write_sample_csv(const std::string& path, const std::vector<double>& t_grid,
                      const std::vector<std::vector<double>>& rows);

std::string density_to_json(const MeshPtr& mesh, const std::vector<double>& values);

}  // namespace frg

#endif  // FRG_IO_HPP_
