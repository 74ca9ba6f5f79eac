#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ginibre {

/// Column-named numeric table serialized as CSV with 17 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  std::string to_csv() const;
};

using MetaValue = std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;
using MetaFields = std::vector<std::pair<std::string, MetaValue>>;

/// Provenance written next to every table.
struct RunMetadata {
  std::string experiment;
  MetaFields config;
  std::uint64_t master_seed = 0;
  std::string rng_name;
  std::string code_version;
  double wall_time = 0.0;  ///< seconds
  std::uint64_t requested_samples = 0;
  std::uint64_t used_samples = 0;
  std::uint64_t discarded_samples = 0;
  MetaFields results;

  std::string to_json() const;
};

/// Library version string.
std::string code_version();

/// A table with its metadata; written as <stem>.csv and <stem>.meta.json.
struct Artifact {
  std::string stem;
  Table table;
  RunMetadata meta;
};

/// Writes every artifact into `dir`, creating it if needed. Returns the CSV paths.
std::vector<std::filesystem::path> write_artifacts(const std::vector<Artifact>& artifacts,
                                                   const std::filesystem::path& dir);

}  // namespace ginibre
