#include "ginibre/table.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ginibre/complex_format.hpp"
#include "ginibre/errors.hpp"

namespace ginibre {

namespace {

nlohmann::json number(double v) {
  // JSON has no NaN/Inf; encode them as strings.
  if (std::isfinite(v)) return v;
  return format_double_full(v);
}

nlohmann::json to_json(const MetaFields& fields) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : fields) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            out[key] = number(v);
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            nlohmann::json arr = nlohmann::json::array();
            for (double x : v) arr.push_back(number(x));
            out[key] = arr;
          } else {
            out[key] = v;
          }
        },
        value);
  }
  return out;
}

}  // namespace

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw ArgumentError("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_double_full(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string RunMetadata::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["config"] = ginibre::to_json(config);
  j["master_seed"] = master_seed;
  j["rng_name"] = rng_name;
  j["code_version"] = code_version;
  j["wall_time"] = wall_time;
  j["requested_samples"] = requested_samples;
  j["used_samples"] = used_samples;
  j["discarded_samples"] = discarded_samples;
  j["results"] = ginibre::to_json(results);
  return j.dump(2) + "\n";
}

std::string code_version() { return GINIBRE_LAB_VERSION; }

std::vector<std::filesystem::path> write_artifacts(const std::vector<Artifact>& artifacts,
                                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& a : artifacts) {
    const auto csv = dir / (a.stem + ".csv");
    const auto meta = dir / (a.stem + ".meta.json");
    std::ofstream(csv, std::ios::binary) << a.table.to_csv();
    std::ofstream(meta, std::ios::binary) << a.meta.to_json();
    if (!std::filesystem::exists(csv)) {
      throw std::runtime_error("could not write " + csv.string());
    }
    written.push_back(csv);
  }
  return written;
}

}  // namespace ginibre
