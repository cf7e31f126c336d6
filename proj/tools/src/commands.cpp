#include <chrono>
#include <map>
#include <sstream>

#include "convsec/error.hpp"
#include "convsec/parallel.hpp"
#include "convsec/sampling.hpp"
#include "convsec/version.hpp"
#include "convsec_tools/experiments.hpp"

namespace convsec::tools {

namespace {

const char* kAxes[] = {"x", "y", "z"};

std::vector<std::string> axis_cols(const std::string& prefix, int n) {
  std::vector<std::string> cols;
  for (int i = 0; i < n; ++i) cols.push_back(prefix + kAxes[i]);
  return cols;
}

void append(std::vector<std::string>& row, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(format_double(v(i)));
}

void append_blank(std::vector<std::string>& row, std::size_t n) { row.insert(row.end(), n, ""); }

std::string error_code(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return std::string(to_string(err->code()));
  return "InternalError";
}

// Result of one work item: either a filled row or a diagnostic.
struct Item {
  std::vector<std::string> csv;
  json row;
  bool failed = false;
};

Item failed_item(std::vector<std::string> prefix, std::size_t blanks, const std::exception& e, json row) {
  Item it;
  it.csv = std::move(prefix);
  append_blank(it.csv, blanks);
  it.csv.push_back(error_code(e));
  row["error"] = error_code(e);
  row["message"] = e.what();
  it.row = std::move(row);
  it.failed = true;
  return it;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report start_report(const ExperimentConfig& c) {
  Report r;
  r.config = to_json(c);
  r.version = kVersion;
  return r;
}

void finish(Report& r, std::vector<Item>& items, const Timer& timer) {
  std::map<std::string, int> errors;
  for (auto& it : items) {
    r.csv_rows.push_back(std::move(it.csv));
    if (it.failed) {
      ++r.n_failed;
      ++errors[it.row["error"].get<std::string>()];
    }
    r.rows.push_back(std::move(it.row));
  }
  r.n_rows = static_cast<int>(items.size());
  r.summary["n_rows"] = r.n_rows;
  r.summary["n_failed"] = r.n_failed;
  r.summary["errors"] = errors;
  r.wall_time = timer.seconds();
}

Vec unit(const Vec& v) { return v / v.norm(); }

// A translation that moves the origin out of the body, or zero if it already is.
Vec origin_clearing_shift(const BodySpec& body) {
  const int dim = body.dim();
  if (body.level(Vec::Zero(dim)) > 0.0) return Vec::Zero(dim);
  const ConeDescriptor cone = body.recession_cone();
  const Vec d = cone.kind() == ConeDescriptor::Kind::trivial ? unit_axis(dim, dim - 1)
                                                             : unit(cone.interior_point());
  const Vec p = body.interior_point();
  const ExtReal back = boundary_hit(body, p, -d);
  const Vec outside = p - (back.value() + std::max(1.0, body.length_scale())) * d;
  return -outside;
}

}  // namespace

json Report::to_json() const {
  json j;
  j["tool"] = "convsec";
  j["version"] = version;
  j["config"] = config;
  j["rows"] = rows;
  j["summary"] = summary;
  j["wall_time"] = wall_time;
  return j;
}

std::string Report::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < csv_header.size(); ++i) os << (i ? "," : "") << csv_header[i];
  os << '\n';
  for (const auto& row : csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

int Report::exit_code() const { return n_rows > 0 && n_failed == n_rows ? 3 : 0; }

Report run_section(const ExperimentConfig& c) {
  const Timer timer;
  Report r = start_report(c);
  const BodySpec& body = *c.body;
  const int dim = body.dim();
  r.csv_header = axis_cols("u", dim);
  r.csv_header.push_back("t");
  r.csv_header.push_back("measure");
  for (auto& s : axis_cols("c", dim)) r.csv_header.push_back(s);
  for (const char* s : {"err", "n_evals", "error"}) r.csv_header.push_back(s);

  std::vector<std::pair<Vec, double>> grid;
  for (const Vec& d : c.directions) {
    for (double t : c.levels) grid.emplace_back(unit(d), t);
  }
  std::vector<Item> items(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto& [u, t] = grid[i];
    std::vector<std::string> prefix;
    append(prefix, u);
    prefix.push_back(format_double(t));
    try {
      const SectionStats s = section_stats(body, u, t, c.tol);
      Item it;
      it.csv = prefix;
      it.csv.push_back(format_double(s.measure));
      append(it.csv, s.centroid);
      it.csv.push_back(format_double(s.err_estimate));
      it.csv.push_back(std::to_string(s.n_evals));
      it.csv.push_back("");
      it.row = section_to_json(s);
      items[i] = std::move(it);
    } catch (const std::exception& e) {
      items[i] = failed_item(prefix, 1 + dim + 2, e, json{{"u", vec_to_json(u)}, {"t", t}});
    }
  });
  finish(r, items, timer);
  double max_err = 0.0;
  for (const auto& row : r.rows) {
    if (row.contains("err_estimate")) max_err = std::max(max_err, row["err_estimate"].get<double>());
  }
  r.summary["max_err_estimate"] = max_err;
  return r;
}

Report run_sccp(const ExperimentConfig& c) {
  const Timer timer;
  Report r = start_report(c);
  const BodySpec& body = *c.body;
  const int dim = body.dim();
  r.csv_header = axis_cols("u", dim);
  for (auto& s : axis_cols("base_", dim)) r.csv_header.push_back(s);
  for (auto& s : axis_cols("dir_", dim)) r.csv_header.push_back(s);
  for (const char* s : {"residual_rms", "residual_norm", "spread", "err", "error"}) r.csv_header.push_back(s);

  std::vector<Vec> dirs;
  for (const Vec& d : c.directions) dirs.push_back(unit(d));
  if (dirs.empty()) dirs = sample_section_normals(body, c.n_directions, c.seed);

  std::vector<Item> items(dirs.size());
  std::vector<std::optional<LineFit>> fits(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t i) {
    std::vector<std::string> prefix;
    append(prefix, dirs[i]);
    try {
      if (!section_bounded(body, dirs[i])) fail(ErrorCode::UnboundedSection, "sections with this normal are unbounded");
      const CentroidLine line = centroid_line(body, dirs[i], c.n_levels, std::min(c.tol, 1e-8));
      Item it;
      it.csv = prefix;
      append(it.csv, line.fit.base);
      append(it.csv, line.fit.dir);
      for (double v : {line.fit.residual_rms, line.fit.residual_norm, line.fit.spread, line.max_centroid_err}) {
        it.csv.push_back(format_double(v));
      }
      it.csv.push_back("");
      it.row = line_fit_to_json(line.fit);
      it.row["u"] = vec_to_json(dirs[i]);
      it.row["err"] = line.max_centroid_err;
      fits[i] = line.fit;
      items[i] = std::move(it);
    } catch (const std::exception& e) {
      items[i] = failed_item(prefix, 2 * dim + 4, e, json{{"u", vec_to_json(dirs[i])}});
    }
  });
  finish(r, items, timer);
  std::vector<LineFit> good;
  for (const auto& f : fits) {
    if (f) good.push_back(*f);
  }
  if (good.size() >= 3) {
    r.summary["verdict"] = verdict_to_json(classify_lines(good, c.classify_tol));
  } else {
    r.summary["verdict"] = nullptr;
  }
  double worst = 0.0;
  for (const auto& f : good) worst = std::max(worst, f.residual_norm);
  r.summary["max_residual_norm"] = worst;
  return r;
}

Report run_cutvol(const ExperimentConfig& c) {
  const Timer timer;
  Report r = start_report(c);
  const int dim = c.body->dim();
  std::vector<Item> items;

  if (c.operation == "volume" || c.operation == "gradient") {
    BodySpec body = *c.body;
    if (c.operation == "gradient" && c.auto_shift) {
      const Vec shift = origin_clearing_shift(body);
      body = body.translated(shift);
      r.summary["shift"] = vec_to_json(shift);
      r.summary["shifted_body"] = body_to_json(body);
    }
    std::vector<CutParam> cuts;
    for (const Vec& a : c.cuts) cuts.push_back(CutParam{a});
    if (cuts.empty()) cuts = sample_cut_params(body, c.n_random, c.seed);

    r.csv_header = axis_cols("a", dim);
    r.csv_header.push_back("V");
    if (c.operation == "gradient") {
      for (auto& s : axis_cols("grad_", dim)) r.csv_header.push_back(s);
      for (const char* s : {"lambda", "identity_residual", "measure_residual", "moment_residual", "section_diameter"}) {
        r.csv_header.push_back(s);
      }
    }
    r.csv_header.push_back("err");
    r.csv_header.push_back("error");

    items.resize(cuts.size());
    parallel_for(cuts.size(), [&](std::size_t i) {
      std::vector<std::string> prefix;
      append(prefix, cuts[i].a);
      try {
        Item it;
        it.csv = prefix;
        if (c.operation == "volume") {
          const CutVolume v = cut_volume(body, cuts[i], c.tol);
          it.csv.push_back(format_double(v.value.to_double()));
          it.csv.push_back(format_double(v.err));
          it.row = json{{"a", vec_to_json(cuts[i].a)}, {"V", ext_to_json(v.value)}, {"err", v.err}, {"n_sections", v.n_sections}};
        } else {
          const CutVolumeResult g = cut_gradient(body, cuts[i], c.tol);
          it.csv.push_back(format_double(g.V));
          append(it.csv, g.grad);
          for (double v : {g.lambda, g.identity_residual, g.measure_residual, g.moment_residual, g.section_diameter, g.err_estimate}) {
            it.csv.push_back(format_double(v));
          }
          it.row = cut_result_to_json(g);
        }
        it.csv.push_back("");
        items[i] = std::move(it);
      } catch (const std::exception& e) {
        const std::size_t blanks = c.operation == "volume" ? 2 : 2 + dim + 5;
        items[i] = failed_item(prefix, blanks, e, json{{"a", vec_to_json(cuts[i].a)}});
      }
    });
    finish(r, items, timer);
    if (c.operation == "gradient") {
      double worst_id = 0.0, worst_meas = 0.0;
      for (const auto& row : r.rows) {
        if (!row.contains("identity_residual")) continue;
        worst_id = std::max(worst_id, row["identity_residual"].get<double>() / row["section_diameter"].get<double>());
        worst_meas = std::max(worst_meas, row["measure_residual"].get<double>());
      }
      r.summary["max_identity_residual_over_diameter"] = worst_id;
      r.summary["max_measure_residual"] = worst_meas;
    }
    return r;
  }

  const BodySpec& body = *c.body;
  std::vector<ScanRow> scan;
  json contacts = json::array();
  if (c.operation == "parallel" || c.operation == "homothety") {
    std::vector<Vec> anchors;
    for (const Vec& x : c.anchors) anchors.push_back(body.graph_point(x));
    scan = c.operation == "parallel" ? parallel_cut_scan(body, c.k, anchors, c.tol)
                                     : homothety_cut_scan(body, c.k, anchors, c.tol);
    r.csv_header = axis_cols("", dim);
  } else {
    const FloatingMode mode = c.floating_mode == "scale" ? FloatingMode::scale : FloatingMode::translate;
    FloatingResult fr = floating_constancy(body, mode, c.lambda, c.n_normals, c.tol);
    scan = std::move(fr.rows);
    for (const Vec& b : fr.contacts) contacts.push_back(vec_to_json(b));
    r.csv_header = axis_cols("u", dim);
  }
  r.csv_header.push_back("value");
  r.csv_header.push_back("err");
  r.csv_header.push_back("error");
  items.resize(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) {
    Item it;
    append(it.csv, scan[i].anchor);
    it.csv.push_back(format_double(scan[i].value));
    it.csv.push_back(format_double(scan[i].err));
    it.csv.push_back("");
    it.row = json{{c.operation == "floating" ? "u" : "anchor", vec_to_json(scan[i].anchor)},
                  {"value", scan[i].value},
                  {"err", scan[i].err}};
    if (c.operation == "floating") it.row["contact"] = contacts[i];
    items[i] = std::move(it);
  }
  finish(r, items, timer);
  r.summary["scan"] = scan_summary_to_json(summarize(scan));
  return r;
}

Report run_asym(const ExperimentConfig& c) {
  const Timer timer;
  Report r = start_report(c);
  const BodySpec& body = *c.body;
  const ConeDescriptor cone = body.recession_cone();
  r.csv_header = {"R", "d_asym", "d_blowdown", "err", "error"};
  r.summary["cone"] = cone_to_json(cone);

  std::vector<Item> items(c.radii.size());
  std::vector<std::optional<ShellDistance>> shells(c.radii.size());
  parallel_for(c.radii.size(), [&](std::size_t i) {
    const double R = c.radii[i];
    try {
      const ShellDistance s = c.operation == "blowdown" ? blowdown_shell(body, R) : shell_distance(body, cone, R);
      Item it;
      for (double v : {s.R, s.d_asym, s.d_blowdown, s.err}) it.csv.push_back(format_double(v));
      it.csv.push_back("");
      it.row = shell_to_json(s);
      shells[i] = s;
      items[i] = std::move(it);
    } catch (const std::exception& e) {
      items[i] = failed_item({format_double(R)}, 3, e, json{{"R", R}});
    }
  });
  finish(r, items, timer);
  if (c.operation == "diagnostic") {
    std::vector<ShellDistance> good;
    for (const auto& s : shells) {
      if (s) good.push_back(*s);
    }
    r.summary["verdict"] = good.size() == shells.size() ? json(std::string(to_string(classify_trend(good)))) : json(nullptr);
  }
  return r;
}

Report run_experiment(const ExperimentConfig& c) {
  try {
    if (c.command == "section") return run_section(c);
    if (c.command == "sccp") return run_sccp(c);
    if (c.command == "cutvol") return run_cutvol(c);
    if (c.command == "asym") return run_asym(c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::NotGraphLike ||
        e.code() == ErrorCode::NotApexCentered || e.code() == ErrorCode::NotOnBoundary ||
        e.code() == ErrorCode::OriginNotInterior) {
      throw ConfigError(e.what());
    }
    throw;
  }
  throw ConfigError("unknown command '" + c.command + "'");
}

}  // namespace convsec::tools
