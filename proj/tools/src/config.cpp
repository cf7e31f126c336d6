#include <cmath>
#include <set>

#include "convsec/error.hpp"
#include "convsec_tools/experiments.hpp"

namespace convsec::tools {

namespace {

const std::set<std::string> kCommands = {"section", "sccp", "cutvol", "asym"};
const std::set<std::string> kCutOps = {"volume", "gradient", "parallel", "homothety", "floating"};
const std::set<std::string> kAsymOps = {"diagnostic", "shell", "blowdown"};

const std::set<std::string> kKeys = {
    "command", "preset", "body", "tol", "seed", "directions", "levels", "n_directions",
    "n_levels", "classify_tol", "operation", "cuts", "n_random", "k", "anchors",
    "floating_mode", "lambda", "n_normals", "auto_shift", "radii"};

[[noreturn]] void bad(const std::string& msg) { throw ConfigError(msg); }

double get_number(const json& j, const char* key) {
  if (!j[key].is_number()) bad(std::string(key) + " must be a number");
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) bad(std::string(key) + " must be finite");
  return v;
}

int get_int(const json& j, const char* key) {
  if (!j[key].is_number_integer()) bad(std::string(key) + " must be an integer");
  return j[key].get<int>();
}

std::vector<Vec> get_vectors(const json& j, const char* key) {
  if (!j[key].is_array()) bad(std::string(key) + " must be an array of vectors");
  std::vector<Vec> out;
  try {
    for (const auto& v : j[key]) out.push_back(vec_from_json(v));
  } catch (const Error& e) {
    bad(std::string(key) + ": " + e.what());
  }
  return out;
}

std::vector<double> get_numbers(const json& j, const char* key) {
  if (!j[key].is_array()) bad(std::string(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) bad(std::string(key) + " must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json vectors_json(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const Vec& v : vs) a.push_back(vec_to_json(v));
  return a;
}

json body_json(const char* kind, int dim, std::vector<double> params, std::vector<double> translation = {},
               const char* function = nullptr) {
  json b{{"kind", kind}, {"dim", dim}, {"params", params}};
  if (translation.empty()) translation.assign(dim, 0.0);
  b["translation"] = translation;
  if (function) b["function"] = function;
  return b;
}

json graph_body(const char* function, int dim = 2) { return body_json("function-epigraph", dim, {}, {}, function); }

json unit_dirs(std::initializer_list<std::vector<double>> dirs) {
  json a = json::array();
  for (const auto& d : dirs) {
    double n = 0.0;
    for (double x : d) n += x * x;
    n = std::sqrt(n);
    json v = json::array();
    for (double x : d) v.push_back(x / n);
    a.push_back(v);
  }
  return a;
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.preset) j["preset"] = *c.preset;
  if (c.body) j["body"] = body_to_json(*c.body);
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  if (c.command == "section") {
    j["directions"] = vectors_json(c.directions);
    j["levels"] = c.levels;
  } else if (c.command == "sccp") {
    j["directions"] = vectors_json(c.directions);
    j["n_directions"] = c.n_directions;
    j["n_levels"] = c.n_levels;
    j["classify_tol"] = c.classify_tol;
  } else if (c.command == "cutvol") {
    j["operation"] = c.operation;
    if (c.operation == "volume" || c.operation == "gradient") {
      j["cuts"] = vectors_json(c.cuts);
      j["n_random"] = c.n_random;
      if (c.operation == "gradient") j["auto_shift"] = c.auto_shift;
    } else if (c.operation == "parallel" || c.operation == "homothety") {
      j["k"] = c.k;
      j["anchors"] = vectors_json(c.anchors);
    } else {
      j["floating_mode"] = c.floating_mode;
      j["lambda"] = c.lambda;
      j["n_normals"] = c.n_normals;
    }
  } else if (c.command == "asym") {
    j["operation"] = c.operation;
    j["radii"] = c.radii;
  }
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) bad("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.count(key)) bad("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  if (!j.contains("command") || !j["command"].is_string()) bad("command must be a string");
  c.command = j["command"].get<std::string>();
  if (!kCommands.count(c.command)) bad("unknown command '" + c.command + "'");
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) bad("preset must be a string");
    c.preset = j["preset"].get<std::string>();
  }
  if (!j.contains("body")) bad("body is required");
  try {
    c.body = body_from_json(j["body"]);
  } catch (const Error& e) {
    bad(std::string("body: ") + e.what());
  }
  if (j.contains("tol")) c.tol = get_number(j, "tol");
  if (!(c.tol > 0.0)) bad("tol must be positive");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0)) {
      bad("seed must be a nonnegative integer");
    }
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("directions")) c.directions = get_vectors(j, "directions");
  for (const Vec& d : c.directions) {
    if (d.size() != c.body->dim() || d.norm() == 0.0) bad("directions must be nonzero vectors of the body dimension");
  }
  if (j.contains("levels")) c.levels = get_numbers(j, "levels");
  if (j.contains("n_directions")) c.n_directions = get_int(j, "n_directions");
  if (j.contains("n_levels")) c.n_levels = get_int(j, "n_levels");
  if (j.contains("classify_tol")) c.classify_tol = get_number(j, "classify_tol");
  if (!(c.classify_tol > 0.0)) bad("classify_tol must be positive");
  if (j.contains("operation")) {
    if (!j["operation"].is_string()) bad("operation must be a string");
    c.operation = j["operation"].get<std::string>();
  }
  if (j.contains("cuts")) c.cuts = get_vectors(j, "cuts");
  for (const Vec& a : c.cuts) {
    if (a.size() != c.body->dim() || a.norm() == 0.0) bad("cuts must be nonzero vectors of the body dimension");
  }
  if (j.contains("n_random")) c.n_random = get_int(j, "n_random");
  if (j.contains("k")) c.k = get_number(j, "k");
  if (j.contains("anchors")) c.anchors = get_vectors(j, "anchors");
  for (const Vec& x : c.anchors) {
    if (x.size() != c.body->dim() - 1) bad("anchors are horizontal positions with dim-1 entries");
  }
  if (j.contains("floating_mode")) {
    if (!j["floating_mode"].is_string()) bad("floating_mode must be a string");
    c.floating_mode = j["floating_mode"].get<std::string>();
  }
  if (j.contains("lambda")) c.lambda = get_number(j, "lambda");
  if (j.contains("n_normals")) c.n_normals = get_int(j, "n_normals");
  if (j.contains("auto_shift")) {
    if (!j["auto_shift"].is_boolean()) bad("auto_shift must be a boolean");
    c.auto_shift = j["auto_shift"].get<bool>();
  }
  if (j.contains("radii")) c.radii = get_numbers(j, "radii");

  if (c.command == "section") {
    if (c.directions.empty() || c.levels.empty()) bad("section needs directions and levels");
  } else if (c.command == "sccp") {
    if (c.directions.empty() && c.n_directions < 3) bad("sccp needs directions or n_directions >= 3");
    if (c.n_levels != 0 && c.n_levels < 8) bad("n_levels must be 0 or >= 8");
  } else if (c.command == "cutvol") {
    if (!kCutOps.count(c.operation)) bad("cutvol operation must be volume, gradient, parallel, homothety or floating");
    if ((c.operation == "volume" || c.operation == "gradient") && c.cuts.empty() && c.n_random < 1) {
      bad(c.operation + " needs cuts or n_random >= 1");
    }
    if ((c.operation == "parallel" || c.operation == "homothety") && c.anchors.empty()) bad(c.operation + " needs anchors");
    if (c.operation == "parallel" && !(c.k > 0.0)) bad("k must be positive");
    if (c.operation == "homothety" && !(c.k > 1.0)) bad("k must exceed 1");
    if (c.operation == "floating") {
      if (c.floating_mode != "translate" && c.floating_mode != "scale") bad("floating_mode must be translate or scale");
      if (c.floating_mode == "translate" && !(c.lambda > 0.0)) bad("lambda must be positive");
      if (c.floating_mode == "scale" && !(c.lambda > 1.0)) bad("lambda must exceed 1");
      if (c.n_normals < 1) bad("n_normals must be positive");
    }
  } else {
    if (c.operation.empty()) c.operation = "diagnostic";
    if (!kAsymOps.count(c.operation)) bad("asym operation must be diagnostic, shell or blowdown");
    if (c.radii.empty()) bad("asym needs radii");
    for (double r : c.radii) {
      if (!(r > 0.0)) bad("radii must be positive");
    }
    if (c.operation == "diagnostic") {
      try {
        validate_radii(c.radii);
      } catch (const Error& e) {
        bad(e.what());
      }
    }
  }
  return c;
}

std::vector<std::string> preset_names(const std::string& command) {
  if (command == "section") return {"disk-grid", "parabola-family", "unbounded-control"};
  if (command == "sccp") return {"ellipsoid", "paraboloid", "hyperboloid", "controls"};
  if (command == "cutvol") {
    return {"parabola-parallel", "paraboloid-parallel", "sphere-gradient", "quartic-control",
            "hyperboloid-homothety", "cosh-control", "parabola-floating", "hyperboloid-floating",
            "quartic-floating"};
  }
  if (command == "asym") return {"fig1", "hyperboloid", "paraboloid", "bounded"};
  bad("unknown command '" + command + "'");
}

json preset_json(const std::string& command, const std::string& name) {
  json j{{"command", command}, {"preset", name}};
  const json radii = {10.0, 100.0, 1000.0, 10000.0};
  if (command == "section") {
    if (name == "disk-grid") {
      j["body"] = body_json("ellipsoid", 2, {1.0});
      j["directions"] = unit_dirs({{1, 0}, {0, 1}, {0.6, 0.8}});
      j["levels"] = {-0.5, 0.0, 0.5};
      return j;
    }
    if (name == "parabola-family") {
      j["body"] = body_json("elliptic-paraboloid-epigraph", 2, {1.0});
      j["directions"] = unit_dirs({{1, 1}, {-0.3, 1}, {-1, 1}, {-2, 1}});
      j["levels"] = {0.25, 1.0, 4.0};
      return j;
    }
    if (name == "unbounded-control") {
      j["body"] = body_json("elliptic-paraboloid-epigraph", 2, {1.0});
      j["directions"] = unit_dirs({{1, 0}, {0, 1}});
      j["levels"] = {1.0, 2.0};
      return j;
    }
  } else if (command == "sccp") {
    if (name == "ellipsoid") {
      j["body"] = body_json("ellipsoid", 3, {2.0, 1.0, 1.5});
      j["n_directions"] = 12;
      return j;
    }
    if (name == "paraboloid") {
      j["body"] = body_json("elliptic-paraboloid-epigraph", 3, {1.0, 2.0});
      j["n_directions"] = 12;
      return j;
    }
    if (name == "hyperboloid") {
      j["body"] = body_json("hyperboloid-upper-sheet", 3, {1.0, 1.5});
      j["n_directions"] = 12;
      return j;
    }
    if (name == "controls") {
      j["body"] = body_json("superellipsoid", 2, {4.0});
      j["directions"] = unit_dirs({{1, 2}, {2, 1}, {1, -3}, {-3, 1}});
      return j;
    }
  } else if (command == "cutvol") {
    if (name == "parabola-parallel") {
      j["body"] = body_json("elliptic-paraboloid-epigraph", 2, {1.0});
      j["operation"] = "parallel";
      j["k"] = 1.0;
      j["anchors"] = {{-2.0}, {-1.0}, {0.0}, {1.0}, {2.0}};
      return j;
    }
    if (name == "paraboloid-parallel") {
      j["body"] = body_json("elliptic-paraboloid-epigraph", 3, {1.0});
      j["operation"] = "parallel";
      j["k"] = 1.0;
      j["anchors"] = {{0.0, 0.0}, {1.0, 0.0}, {0.5, -1.0}, {-1.0, 1.0}, {2.0, 1.0}};
      return j;
    }
    if (name == "sphere-gradient") {
      j["body"] = body_json("ellipsoid", 3, {1.0}, {0.0, 0.0, 3.0});
      j["operation"] = "gradient";
      j["n_random"] = 10;
      return j;
    }
    if (name == "quartic-control") {
      j["body"] = graph_body("quartic");
      j["operation"] = "parallel";
      j["k"] = 1.0;
      j["anchors"] = {{0.0}, {1.0}};
      return j;
    }
    if (name == "hyperboloid-homothety") {
      j["body"] = body_json("hyperboloid-upper-sheet", 2, {1.0});
      j["operation"] = "homothety";
      j["k"] = 2.0;
      j["anchors"] = {{-1.0}, {-0.5}, {0.0}, {0.5}, {1.0}};
      return j;
    }
    if (name == "cosh-control") {
      j["body"] = graph_body("cosh");
      j["operation"] = "homothety";
      j["k"] = 2.0;
      j["anchors"] = {{-1.0}, {0.0}, {0.5}, {1.0}};
      return j;
    }
    if (name == "parabola-floating" || name == "quartic-floating") {
      j["body"] = name == "parabola-floating" ? body_json("elliptic-paraboloid-epigraph", 2, {1.0}) : graph_body("quartic");
      j["operation"] = "floating";
      j["floating_mode"] = "translate";
      j["lambda"] = 1.0;
      j["n_normals"] = 12;
      return j;
    }
    if (name == "hyperboloid-floating") {
      j["body"] = body_json("hyperboloid-upper-sheet", 2, {1.0});
      j["operation"] = "floating";
      j["floating_mode"] = "scale";
      j["lambda"] = 2.0;
      j["n_normals"] = 12;
      return j;
    }
  } else if (command == "asym") {
    j["operation"] = "diagnostic";
    j["radii"] = radii;
    if (name == "fig1") {
      j["body"] = graph_body("exp");
      return j;
    }
    if (name == "hyperboloid") {
      j["body"] = body_json("hyperboloid-upper-sheet", 2, {1.0});
      return j;
    }
    if (name == "paraboloid") {
      j["body"] = body_json("elliptic-paraboloid-epigraph", 2, {1.0});
      return j;
    }
    if (name == "bounded") {
      j["body"] = body_json("ellipsoid", 2, {2.0, 1.0});
      return j;
    }
  } else {
    bad("unknown command '" + command + "'");
  }
  bad("unknown " + command + " preset '" + name + "'");
}

}  // namespace convsec::tools
