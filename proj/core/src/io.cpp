#include "convsec/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "convsec/error.hpp"

namespace convsec {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::InvalidArgument, msg); }

}  // namespace

json vec_to_json(const Vec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of numbers");
  if (j.size() > 3) bad("vectors have at most 3 entries");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) bad("expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

json ext_to_json(const ExtReal& x) {
  if (x.is_pos_inf()) return "+inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

ExtReal ext_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j == "+inf" || j == "inf") return ExtReal::pos_inf();
  if (j == "-inf") return ExtReal::neg_inf();
  bad("expected a number, \"+inf\" or \"-inf\"");
}

json body_to_json(const BodySpec& body) {
  json j;
  j["kind"] = std::string(to_string(body.kind()));
  j["dim"] = body.dim();
  j["params"] = body.params();
  j["translation"] = vec_to_json(body.translation());
  if (body.function()) j["function"] = std::string(to_string(*body.function()));
  return j;
}

BodySpec body_from_json(const json& j) {
  if (!j.is_object()) bad("body must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "kind" && key != "dim" && key != "params" && key != "translation" && key != "function") {
      bad("unknown body field '" + key + "'");
    }
  }
  if (!j.contains("kind") || !j["kind"].is_string()) bad("body.kind must be a string");
  const auto kind = parse_body_kind(j["kind"].get<std::string>());
  if (!kind) bad("unknown body kind '" + j["kind"].get<std::string>() + "'");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) bad("body.dim must be an integer");
  const int dim = j["dim"].get<int>();
  std::vector<double> params;
  if (j.contains("params")) {
    if (!j["params"].is_array()) bad("body.params must be an array");
    for (const auto& p : j["params"]) {
      if (!p.is_number()) bad("body.params must hold numbers");
      params.push_back(p.get<double>());
    }
  }
  Vec translation = Vec::Zero(dim == 2 || dim == 3 ? dim : 0);
  if (j.contains("translation")) translation = vec_from_json(j["translation"]);
  std::optional<GraphFunction> function;
  if (j.contains("function")) {
    if (!j["function"].is_string()) bad("body.function must be a string");
    function = parse_graph_function(j["function"].get<std::string>());
    if (!function) bad("unknown graph function '" + j["function"].get<std::string>() + "'");
  }
  return BodySpec(*kind, dim, std::move(params), translation, function);
}

json cone_to_json(const ConeDescriptor& cone) {
  json j;
  j["description"] = cone.describe();
  j["dim"] = cone.dim();
  j["cone_dim"] = cone.cone_dim();
  if (!cone.slopes().empty()) j["slopes"] = cone.slopes();
  return j;
}

json section_to_json(const SectionStats& s) {
  return json{{"u", vec_to_json(s.u)},
              {"t", s.t},
              {"measure", s.measure},
              {"centroid", vec_to_json(s.centroid)},
              {"err_estimate", s.err_estimate},
              {"centroid_err", s.centroid_err},
              {"diameter", s.diameter},
              {"n_evals", s.n_evals}};
}

json line_fit_to_json(const LineFit& f) {
  return json{{"base", vec_to_json(f.base)},
              {"dir", vec_to_json(f.dir)},
              {"residual_rms", f.residual_rms},
              {"residual_norm", f.residual_norm},
              {"spread", f.spread},
              {"n_points", f.n_points}};
}

json verdict_to_json(const LineFamilyVerdict& v) {
  return json{{"tag", std::string(to_string(v.tag))},
              {"witness", vec_to_json(v.witness)},
              {"score", v.score},
              {"tie", v.tie},
              {"max_distance", v.max_distance},
              {"max_angle", v.max_angle},
              {"max_residual_norm", v.max_residual_norm},
              {"scale", v.scale}};
}

json cut_result_to_json(const CutVolumeResult& r) {
  return json{{"a", vec_to_json(r.a)},
              {"V", r.V},
              {"grad", vec_to_json(r.grad)},
              {"lambda", r.lambda},
              {"x_a", vec_to_json(r.x_a)},
              {"section_measure", r.section_measure},
              {"section_diameter", r.section_diameter},
              {"identity_residual", r.identity_residual},
              {"moment_residual", r.moment_residual},
              {"measure_residual", r.measure_residual},
              {"err_estimate", r.err_estimate},
              {"step", r.step}};
}

json scan_summary_to_json(const ScanSummary& s) {
  return json{{"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"rel_spread", s.rel_spread}};
}

json shell_to_json(const ShellDistance& s) {
  return json{{"R", s.R},
              {"d_asym", s.d_asym},
              {"d_blowdown", s.d_blowdown},
              {"err", s.err},
              {"body_to_cone", s.body_to_cone},
              {"cone_to_body", s.cone_to_body},
              {"n_body_points", s.n_body_points},
              {"n_cone_points", s.n_cone_points}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string section_csv_header(int dim) {
  static const char* axes[] = {"x", "y", "z"};
  std::ostringstream os;
  for (int i = 0; i < dim; ++i) os << 'u' << axes[i] << ',';
  os << "t,measure,";
  for (int i = 0; i < dim; ++i) os << 'c' << axes[i] << ',';
  os << "err,n_evals";
  return os.str();
}

std::string section_csv_row(const SectionStats& s) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < s.u.size(); ++i) os << format_double(s.u(i)) << ',';
  os << format_double(s.t) << ',' << format_double(s.measure) << ',';
  for (Eigen::Index i = 0; i < s.centroid.size(); ++i) os << format_double(s.centroid(i)) << ',';
  os << format_double(s.err_estimate) << ',' << s.n_evals;
  return os.str();
}

}  // namespace convsec
