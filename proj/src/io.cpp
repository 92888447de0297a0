#include "frg/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace frg {

namespace {

bool has_suffix(const std::string& path, const std::string& suffix) {
  return path.size() >= suffix.size() &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(values[i]);
  }
  return out;
}

DensityFile parse_json_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " +
                                error.what());
  }
  if (!doc.contains("mesh") || !doc.contains("values")) {
    throw std::invalid_argument("'" + path + "' lacks mesh or values field");
  }
  const nlohmann::json& mesh_doc = doc["mesh"];
  const MeshKind kind =
      mesh_kind_from_string(mesh_doc.value("kind", std::string("custom")));
  std::vector<double> weights =
      mesh_doc.at("weights").get<std::vector<double>>();
  std::vector<double> positions;
  if (mesh_doc.contains("positions")) {
    positions = mesh_doc["positions"].get<std::vector<double>>();
  }
  if (mesh_doc.contains("n") &&
      mesh_doc["n"].get<std::size_t>() != weights.size()) {
    throw std::invalid_argument("'" + path + "': n does not match weights");
  }
  auto mesh = std::make_shared<QuadratureMesh>(kind, std::move(weights),
                                               std::move(positions));
  return {std::move(mesh), doc["values"].get<std::vector<double>>()};
}

DensityFile parse_csv_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::vector<double> weights;
  std::vector<double> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (line_number == 1 && !line.empty() &&
        !std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-' &&
        line[0] != '+' && line[0] != '.') {
      continue;  // header row
    }
    std::istringstream row(line);
    std::string weight_field;
    std::string value_field;
    if (!std::getline(row, weight_field, ',') ||
        !std::getline(row, value_field, ',')) {
      throw std::invalid_argument("'" + path + "' line " +
                                  std::to_string(line_number) +
                                  ": expected weight,value");
    }
    weights.push_back(std::stod(weight_field));
    values.push_back(std::stod(value_field));
  }
  auto mesh = std::make_shared<QuadratureMesh>(MeshKind::custom, std::move(weights));
  return {std::move(mesh), std::move(values)};
}

void write_csv_density(const std::string& path, const QuadratureMesh& mesh,
                       const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << "weight,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << format_number(mesh.weight(i)) << ',' << format_number(values[i])
        << '\n';
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.8e", value);
  return buffer;
}

DensityFile read_density_file(const std::string& path) {
  if (has_suffix(path, ".csv")) return parse_csv_density(path);
  return parse_json_density(path);
}

namespace {

// Values are stored at 9 significant digits, which can push the mass a few
// 1e-10 away from its constraint; absorb that residue, reject anything worse.
constexpr double kFileRoundoff = 1e-6;

}  // namespace

Density read_density(const std::string& path) {
  DensityFile file = read_density_file(path);
  for (std::size_t i = 0; i < file.values.size(); ++i) {
    if (!(file.values[i] > 0.0)) {
      throw std::invalid_argument("'" + path +
                                  "': density value must be positive at node " +
                                  std::to_string(i) + " (value " +
                                  std::to_string(file.values[i]) + ")");
    }
  }
  const double mass = integrate(file.values, *file.mesh);
  if (std::abs(mass - 1.0) > kFileRoundoff) {
    throw std::invalid_argument("'" + path + "': density mass is " +
                                std::to_string(mass) + ", expected 1");
  }
  for (double& v : file.values) v /= mass;
  return Density(std::move(file.mesh), std::move(file.values));
}

TangentDensity read_tangent(const std::string& path) {
  DensityFile file = read_density_file(path);
  const double mass = integrate(file.values, *file.mesh);
  if (std::abs(mass) > kFileRoundoff) {
    throw std::invalid_argument("'" + path + "': tangent mass is " +
                                std::to_string(mass) + ", expected 0");
  }
  for (double& v : file.values) v -= mass;
  return TangentDensity(std::move(file.mesh), std::move(file.values));
}

std::string density_to_json(const MeshPtr& mesh, const std::vector<double>& values) {
  std::string out = "{\n  \"mesh\": {\n    \"kind\": \"" +
                    to_string(mesh->kind()) + "\",\n    \"n\": " +
                    std::to_string(mesh->size()) + ",\n    \"weights\": [" +
                    join_numbers(mesh->weights()) + "]";
  if (mesh->has_positions()) {
    out += ",\n    \"positions\": [" + join_numbers(mesh->positions()) + "]";
  }
  out += "\n  },\n  \"values\": [" + join_numbers(values) + "]\n}\n";
  return out;
}

void write_density(const std::string& path, const Density& density) {
  if (has_suffix(path, ".csv")) {
    write_csv_density(path, density.mesh(), density.values());
    return;
  }
  write_file(path, density_to_json(density.mesh_ptr(), density.values()));
}

void write_tangent(const std::string& path, const TangentDensity& tangent) {
  if (has_suffix(path, ".csv")) {
    write_csv_density(path, tangent.mesh(), tangent.values());
    return;
  }
  write_file(path, density_to_json(tangent.mesh_ptr(), tangent.values()));
}

void write_sample_csv(const std::string& path, const std::vector<double>& t_grid,
                      const std::vector<std::vector<double>>& rows) {
  if (t_grid.size() != rows.size()) {
    throw std::invalid_argument("write_sample_csv: grid/row count mismatch");
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << 't';
  if (!rows.empty()) {
    for (std::size_t j = 0; j < rows.front().size(); ++j) out << ",v" << j;
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << format_number(t_grid[i]);
    for (const double v : rows[i]) out << ',' << format_number(v);
    out << '\n';
  }
}

}  // namespace frg
