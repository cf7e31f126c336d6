#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convsec/io.hpp"

namespace convsec::tools {

/// One experiment, as read from a config file and/or a preset. Round-trips
/// through to_json/config_from_json; see docs/config_schema.json.
struct ExperimentConfig {
  std::string command;                 // section | sccp | cutvol | asym
  std::optional<std::string> preset;
  std::optional<BodySpec> body;
  double tol = 1e-8;
  std::uint64_t seed = 0;

  // section / sccp
  std::vector<Vec> directions;
  std::vector<double> levels;          // section: level grid
  int n_directions = 0;                // sccp: sampled when directions is empty
  int n_levels = 0;                    // sccp: 0 selects the default policy
  double classify_tol = 1e-5;

  // cutvol
  std::string operation;               // cutvol: volume | gradient | parallel | homothety | floating
                                       // asym: diagnostic | shell | blowdown
  std::vector<Vec> cuts;               // explicit cut parameters a
  int n_random = 0;                    // random admissible cuts when cuts is empty
  double k = 1.0;
  std::vector<Vec> anchors;            // horizontal positions (dim-1 entries)
  std::string floating_mode = "translate";
  double lambda = 1.0;
  int n_normals = 12;
  bool auto_shift = true;

  // asym
  std::vector<double> radii;
};

/// Invalid configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const json& j);

/// Preset names per command.
std::vector<std::string> preset_names(const std::string& command);

/// The preset as a JSON config object. Throws ConfigError for unknown names.
json preset_json(const std::string& command, const std::string& name);

struct Report {
  json config;                        // normalized config echo, rerunnable
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  json rows = json::array();
  json summary = json::object();
  double wall_time = 0.0;
  std::string version;
  int n_rows = 0;
  int n_failed = 0;

  json to_json() const;
  std::string csv() const;
  /// 0 success, 3 when every row failed.
  int exit_code() const;
};

Report run_section(const ExperimentConfig& c);
Report run_sccp(const ExperimentConfig& c);
Report run_cutvol(const ExperimentConfig& c);
Report run_asym(const ExperimentConfig& c);

/// Dispatches on c.command.
Report run_experiment(const ExperimentConfig& c);

}  // namespace convsec::tools
