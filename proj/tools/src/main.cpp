#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "convsec/error.hpp"
#include "convsec/version.hpp"
#include "convsec_tools/experiments.hpp"

namespace {

using convsec::json;
using convsec::tools::ConfigError;

struct Options {
  std::string config;
  std::string out;
  std::string preset;
  std::string format = "json";
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool list_presets = false;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  try {
    json j = json::parse(in);
    // A report embeds its own config; accept it directly for reruns.
    if (j.is_object() && j.contains("tool") && j.contains("config")) return j["config"];
    return j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

int run(const std::string& command, const Options& opt) {
  if (opt.list_presets) {
    for (const auto& name : convsec::tools::preset_names(command)) std::cout << name << '\n';
    return 0;
  }
  json cfg = json::object();
  if (!opt.preset.empty()) cfg = convsec::tools::preset_json(command, opt.preset);
  if (!opt.config.empty()) cfg.merge_patch(load_json(opt.config));
  if (cfg.empty()) throw ConfigError("give --config and/or --preset");
  if (cfg.contains("command") && cfg["command"] != command) {
    throw ConfigError("config is for '" + cfg["command"].get<std::string>() + "', not '" + command + "'");
  }
  cfg["command"] = command;
  if (opt.tol) cfg["tol"] = *opt.tol;
  if (opt.seed) cfg["seed"] = *opt.seed;

  const auto config = convsec::tools::config_from_json(cfg);
  const auto report = convsec::tools::run_experiment(config);
  const std::string json_text = report.to_json().dump(2) + "\n";
  const std::string csv_text = report.csv();
  if (!opt.out.empty()) {
    std::filesystem::create_directories(opt.out);
    write_file(std::filesystem::path(opt.out) / (command + ".json"), json_text);
    write_file(std::filesystem::path(opt.out) / (command + ".csv"), csv_text);
  }
  std::cout << (opt.format == "csv" ? csv_text : json_text);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplane sections, centroid lines, cut volumes and asymptotic cones of convex bodies"};
  app.set_version_flag("--version", convsec::kVersion);
  app.require_subcommand(1);

  Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"section", "Section measures and centroids over a (direction, level) grid"},
      {"sccp", "Centroid-line fits and the concurrent/parallel/neither verdict"},
      {"cutvol", "Cut volumes, gradient identity audits and constancy scans"},
      {"asym", "Shell distances to the recession cone and asymptotic verdicts"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config, "JSON config file (or a previous report)");
    sub->add_option("--out", opt.out, "Directory for <command>.json and <command>.csv");
    sub->add_option("--tol", opt.tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Seed for direction and cut sampling");
    sub->add_option("--preset", opt.preset, "Named experiment");
    sub->add_option("--format", opt.format, "Output on stdout")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--list-presets", opt.list_presets, "Print preset names and exit");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
