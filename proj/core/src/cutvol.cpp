#include "convsec/cutvol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "convsec/cone.hpp"
#include "convsec/error.hpp"
#include "convsec/parallel.hpp"
#include "convsec/sampling.hpp"
#include "convsec/sections.hpp"

namespace convsec {

namespace {

constexpr unsigned kMaxDepth = 18;

// Volume of set cap {<n, y> <= c} for unit n.
CutVolume slab_volume(const ConvexSet& set, const Vec& n, double c, double tol) {
  CutVolume out;
  const ExtReal h_minus = set.support(-n);
  if (h_minus.is_finite() && c <= -h_minus.value()) {
    out.value = 0.0;
    return out;
  }
  if (!set.recession_cone().strictly_positive(n)) {
    out.value = ExtReal::pos_inf();
    return out;
  }
  const double s_min = -h_minus.value();
  const ExtReal h_plus = set.support(n);
  const bool full = h_plus.is_finite() && c >= h_plus.value();
  const double s_max = full ? h_plus.value() : c;
  const double len = s_max - s_min;
  const double sec_tol = std::max(1e-13, 0.1 * tol);

  double max_rel_err = 0.0;
  int count = 0;
  auto measure = [&](double s) {
    ++count;
    try {
      const SectionStats st = section_stats(set, n, s, sec_tol);
      if (st.measure > 0.0) max_rel_err = std::max(max_rel_err, st.err_estimate / st.measure);
      return st.measure;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::LevelOutOfRange || e.code() == ErrorCode::DegenerateSection) {
        return 0.0;
      }
      throw;
    }
  };

  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  double quad_err = 0.0;
  double value = 0.0;
  if (full) {
    // Both ends are tangencies: s = mid - half cos(theta).
    const double mid = 0.5 * (s_min + s_max), half = 0.5 * len;
    auto f = [&](double th) { return half * std::sin(th) * measure(mid - half * std::cos(th)); };
    value = Quad::integrate(f, 0.0, std::numbers::pi, kMaxDepth, tol, &quad_err);
  } else {
    // Only the lower end is a tangency: s = s_min + len * tau^2.
    auto f = [&](double tau) { return 2.0 * len * tau * measure(s_min + len * tau * tau); };
    value = Quad::integrate(f, 0.0, 1.0, kMaxDepth, tol, &quad_err);
  }
  out.value = std::max(0.0, value);
  out.err = quad_err + max_rel_err * std::abs(value);
  out.n_sections = count;
  return out;
}

void check_vector(const ConvexSet& set, const Vec& a) {
  if (a.size() != set.dim()) fail(ErrorCode::InvalidArgument, "cut parameter has wrong dimension");
  if (!a.allFinite() || a.norm() == 0.0) fail(ErrorCode::InvalidArgument, "cut parameter must be finite and nonzero");
}

BodySpec local_frame(const BodySpec& body) {
  return BodySpec(body.kind(), body.dim(), body.params(), Vec::Zero(body.dim()), body.function());
}

bool has_apex(const BodySpec& body) {
  return body.kind() == BodyKind::hyperboloid_sheet ||
         (body.kind() == BodyKind::function_epigraph && body.function() == GraphFunction::cosh);
}

}  // namespace

CutVolume cut_volume(const ConvexSet& set, const CutParam& a, double tol) {
  check_vector(set, a.a);
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double na = a.a.norm();
  return slab_volume(set, a.a / na, 1.0 / na, tol);
}

CutVolume halfspace_volume(const ConvexSet& set, const Vec& n, double c, double tol) {
  check_vector(set, n);
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double nn = n.norm();
  return slab_volume(set, n / nn, c / nn, tol);
}

CutVolumeResult cut_gradient(const ConvexSet& set, const CutParam& a, double tol) {
  check_vector(set, a.a);
  if (set.level(Vec::Zero(set.dim())) <= 0.0) {
    fail(ErrorCode::OriginInsideBody, "translate the body so that it misses the origin");
  }
  const CutVolume v0 = cut_volume(set, a, tol);
  if (!v0.value.is_finite() || v0.value.value() <= 0.0) {
    fail(ErrorCode::DegenerateCut, "cut volume is " + v0.value.to_string());
  }

  const int dim = set.dim();
  const double na = a.a.norm();
  const double h = std::max(1.0, na) * std::cbrt(tol);
  // Central differences at h and h/2 combined by one Richardson step.
  std::vector<CutVolume> probes(4 * dim);
  parallel_for(probes.size(), [&](std::size_t k) {
    const double step = (k / (2 * dim) == 0 ? h : 0.5 * h) * (k % 2 == 0 ? 1.0 : -1.0);
    Vec ap = a.a;
    ap(static_cast<Eigen::Index>((k % (2 * dim)) / 2)) += step;
    probes[k] = cut_volume(set, CutParam{ap}, tol);
  });

  CutVolumeResult r;
  r.a = a.a;
  r.V = v0.value.value();
  r.err_estimate = v0.err;
  r.step = h;
  r.grad = Vec::Zero(dim);
  for (const auto& p : probes) {
    if (!p.value.is_finite()) fail(ErrorCode::DegenerateCut, "finite-difference probe left the finite-volume region");
  }
  for (int i = 0; i < dim; ++i) {
    const double coarse = (probes[2 * i].value.value() - probes[2 * i + 1].value.value()) / (2.0 * h);
    const double fine = (probes[2 * dim + 2 * i].value.value() - probes[2 * dim + 2 * i + 1].value.value()) / h;
    r.grad(i) = (4.0 * fine - coarse) / 3.0;
  }
  r.lambda = a.a.dot(r.grad);
  if (r.lambda == 0.0) fail(ErrorCode::DegenerateCut, "gradient is orthogonal to a");

  const SectionStats sec = section_stats(set, a.a / na, 1.0 / na, std::max(1e-13, 0.1 * tol));
  r.x_a = sec.centroid;
  r.section_measure = sec.measure;
  r.section_diameter = sec.diameter;
  r.identity_residual = (r.x_a - r.grad / r.lambda).norm();
  // Points leave C(a)^- as a grows, so the moment formula carries a minus sign.
  const Vec moment = -sec.measure / na * sec.centroid;
  r.moment_residual = (r.grad - moment).norm() / std::max(r.grad.norm(), 1e-300);
  r.measure_residual = std::abs(std::abs(r.lambda) * na - sec.measure) / sec.measure;
  return r;
}

ScanSummary summarize(std::span<const ScanRow> rows) {
  ScanSummary s;
  if (rows.empty()) return s;
  s.min = s.max = rows.front().value;
  double sum = 0.0;
  for (const auto& r : rows) {
    s.min = std::min(s.min, r.value);
    s.max = std::max(s.max, r.value);
    sum += r.value;
  }
  s.mean = sum / static_cast<double>(rows.size());
  s.rel_spread = s.mean != 0.0 ? (s.max - s.min) / std::abs(s.mean) : 0.0;
  return s;
}

std::vector<ScanRow> parallel_cut_scan(const BodySpec& body, double k,
                                       std::span<const Vec> anchors, double tol) {
  if (!body.graph_like()) fail(ErrorCode::NotGraphLike, std::string(to_string(body.kind())) + " is not an epigraph");
  if (!(k > 0.0)) fail(ErrorCode::InvalidArgument, "k must be positive");
  std::vector<ScanRow> rows(anchors.size());
  parallel_for(anchors.size(), [&](std::size_t i) {
    const Vec& x = anchors[i];
    const Vec normal = body.outer_normal(x);
    const double c = -normal.dot(x) - k * normal(body.dim() - 1);
    const CutVolume v = halfspace_volume(body, -normal, c, tol);
    rows[i] = ScanRow{x, v.value.to_double(), v.err};
  });
  return rows;
}

std::vector<ScanRow> homothety_cut_scan(const BodySpec& body, double k,
                                        std::span<const Vec> anchors, double tol) {
  if (!has_apex(body)) {
    fail(ErrorCode::NotApexCentered, std::string(to_string(body.kind())) + " has no apex to scale about");
  }
  if (!(k > 1.0)) fail(ErrorCode::InvalidArgument, "k must exceed 1");
  const BodySpec local = local_frame(body);
  std::vector<ScanRow> rows(anchors.size());
  parallel_for(anchors.size(), [&](std::size_t i) {
    const Vec y = anchors[i] - body.translation();
    const Vec normal = local.outer_normal(y);
    const double offset = normal.dot(y);
    if (!(offset < 0.0)) fail(ErrorCode::DegenerateCut, "tangent hyperplane passes through the apex");
    const CutVolume v = cut_volume(local, CutParam{normal / (offset * k)}, tol);
    rows[i] = ScanRow{anchors[i], v.value.to_double(), v.err};
  });
  return rows;
}

std::string_view to_string(FloatingMode mode) {
  return mode == FloatingMode::translate ? "translate" : "scale";
}

std::vector<Vec> graph_normals(const BodySpec& body, int n) {
  if (!body.graph_like()) fail(ErrorCode::NotGraphLike, std::string(to_string(body.kind())) + " is not an epigraph");
  if (n < 1) fail(ErrorCode::InvalidArgument, "need at least one normal");
  const int dim = body.dim();
  double radius = 1.5;
  if (body.kind() == BodyKind::hyperboloid_sheet) {
    double amax = 0.0;
    for (int i = 0; i < dim - 1; ++i) amax = std::max(amax, body.params()[std::min<std::size_t>(i, body.params().size() - 1)]);
    radius = 0.8 / amax;
  }
  // exp has slopes in (0, inf) only.
  const bool positive_only = body.function() == GraphFunction::exp;
  std::vector<Vec> out;
  for (int j = 0; j < n; ++j) {
    Vec w(dim - 1);
    if (dim == 2) {
      const double frac = n == 1 ? 0.5 : static_cast<double>(j) / (n - 1);
      w(0) = positive_only ? 0.1 + frac * (radius - 0.1) : -radius + 2.0 * radius * frac;
    } else {
      const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
      const double r = radius * std::sqrt((j + 0.5) / n);
      w(0) = r * std::cos(golden * j);
      w(1) = r * std::sin(golden * j);
      if (positive_only) w = w.cwiseAbs().array() + 0.1;
    }
    Vec u(dim);
    u.head(dim - 1) = w;
    u(dim - 1) = -1.0;
    out.push_back(u.normalized());
  }
  return out;
}

FloatingResult floating_constancy(const BodySpec& body, FloatingMode mode, double lambda,
                                  int n_normals, double tol) {
  if (mode == FloatingMode::translate && !(lambda > 0.0)) {
    fail(ErrorCode::InvalidArgument, "translation lambda must be positive");
  }
  if (mode == FloatingMode::scale && !(lambda > 1.0)) {
    fail(ErrorCode::InvalidArgument, "scale lambda must exceed 1");
  }
  const std::vector<Vec> normals = graph_normals(body, n_normals);
  const BodySpec frame = mode == FloatingMode::scale ? local_frame(body) : body;
  const int dim = body.dim();

  FloatingResult res;
  res.rows.resize(normals.size());
  res.contacts.resize(normals.size());
  parallel_for(normals.size(), [&](std::size_t i) {
    const Vec& u = normals[i];
    Vec b = frame.inverse_gauss(u);
    if (mode == FloatingMode::translate) {
      b(dim - 1) += lambda;
    } else {
      b *= lambda;
    }
    const CutVolume v = halfspace_volume(frame, -u, -u.dot(b), tol);
    res.rows[i] = ScanRow{u, v.value.to_double(), v.err};
    res.contacts[i] = mode == FloatingMode::scale ? Vec(b + body.translation()) : b;
  });
  res.summary = summarize(res.rows);
  return res;
}

std::vector<CutParam> sample_cut_params(const ConvexSet& set, int n, std::uint64_t seed) {
  const bool unbounded = set.recession_cone().kind() != ConeDescriptor::Kind::trivial;
  const double scale = std::max(1.0, set.length_scale());
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<CutParam> out;
  std::uint64_t batch = seed;
  int attempts = 0;
  while (static_cast<int>(out.size()) < n) {
    if (++attempts > 10000) fail(ErrorCode::InvalidArgument, "could not sample cut parameters");
    const Vec u = sample_section_normals(set, 1, batch++).front();
    const Interval iv = admissible_levels(set, u);
    double lo = iv.lo.value();
    double hi = iv.hi.is_finite() ? iv.hi.value() : 0.0;
    if (unbounded) {
      lo = std::max(lo, 0.0);
      if (!iv.hi.is_finite()) hi = lo + 3.0 * scale;
    }
    if (!(hi > lo)) continue;
    const double t = lo + (0.1 + 0.8 * rng.uniform()) * (hi - lo);
    if (std::abs(t) < 0.05 * (hi - lo)) continue;
    out.push_back(CutParam{u / t});
  }
  return out;
}

}  // namespace convsec
