#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "decaylab/bnorm.hpp"
#include "decaylab/table_io.hpp"

namespace decaylab {

/// Invalid configuration (CLI exit status 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not meet its own accuracy or validity checks (exit status 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double min = 1.0;
  double max = 1.0;
  int points = 2;
};

/// Geometric grid; with integer = true the points are rounded and deduplicated.
std::vector<double> geometric_grid(const GridSpec& g, bool integer);

struct ExperimentConfig {
  std::string experiment;
  std::optional<double> beta, alpha, q, p, c, omega_p, omega_q, tolerance, margin;
  std::optional<std::size_t> K;
  std::optional<GridSpec> n_grid;
  std::optional<GridSpec> t_grid;
  std::optional<std::uint64_t> seed;
  std::optional<NormMode> mode;
  std::filesystem::path out;
  std::map<std::string, std::string> given;  // keys as supplied, for the summary
};

/// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Typed config from key/value pairs. Keys: experiment, out, beta, alpha, q, p,
/// c, omega_p, omega_q, K, n_min, n_max, n_points, t_min, t_max, t_points,
/// seed, mode, tolerance, margin. Throws ConfigError.
ExperimentConfig parse_config(const std::map<std::string, std::string>& kv);

struct ExperimentResult {
  std::string experiment;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json fit = nullptr;  // {exponent, log_power, residual} of the headline series
  bool pass = false;
  double tolerance = 0.0;
  std::vector<Table> tables;
  nlohmann::json series = nlohmann::json::array();  // per-table fits and verdicts
  nlohmann::json checks = nlohmann::json::array();  // named boolean checks
  nlohmann::json notes = nlohmann::json::array();
  bool numerical_failure = false;
  std::string failure;
};

struct ExperimentInfo {
  std::string name;
  std::string result;    // the statement it exercises
  std::string defaults;  // human-readable default parameters
  std::vector<std::string> keys;  // accepted parameter keys besides experiment/out
};

const std::vector<ExperimentInfo>& registry();
const ExperimentInfo* find_experiment(const std::string& name);

/// Text printed by `list`: one block per registry entry, stable across runs.
std::string list_text();

/// Validates the config against the entry's keys and constraints (ConfigError)
/// and runs it. Numerical trouble is reported through numerical_failure.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// The summary document: experiment, params, fit, pass, tolerance, plus series/checks/notes.
nlohmann::json summary_json(const ExperimentResult& result);

/// <dir>/<table>.csv for every table and <dir>/summary.json; creates dir.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace decaylab
