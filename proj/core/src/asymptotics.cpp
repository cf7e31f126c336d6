#include "convsec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numbers>
#include <optional>

#include <boost/math/tools/minima.hpp>

#include "convsec/error.hpp"
#include "convsec/parallel.hpp"

namespace convsec {

namespace {

constexpr int kCircleNodes = 4096;
constexpr int kSphereNodes = 720;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Roots of g on [lo, hi] given by sign changes between consecutive nodes.
template <class G>
std::vector<double> sign_change_roots(G&& g, const std::vector<double>& nodes) {
  std::vector<double> roots;
  std::vector<double> vals(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = g(nodes[i]);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (vals[i] == 0.0) {
      roots.push_back(nodes[i]);
      continue;
    }
    if ((vals[i] < 0.0) == (vals[i + 1] < 0.0)) continue;
    double a = nodes[i], b = nodes[i + 1];
    const bool a_inside = vals[i] < 0.0;
    for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)); ++it) {
      const double m = 0.5 * (a + b);
      if ((g(m) < 0.0) == a_inside) a = m; else b = m;
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

double angle_of(const Vec& p) { return std::atan2(p(1), p(0)); }

std::vector<Vec> circle_boundary(const BodySpec& body, const ConeDescriptor& cone, double R) {
  std::vector<double> nodes;
  nodes.reserve(kCircleNodes + 8);
  const double base = -std::numbers::pi;
  for (int k = 0; k <= kCircleNodes + 1; ++k) nodes.push_back(base + kTwoPi * k / kCircleNodes);
  // Narrow arcs of the body on large circles sit around the cone directions.
  if (cone.kind() != ConeDescriptor::Kind::trivial) {
    nodes.push_back(angle_of(cone.interior_point()));
    for (const Vec& p : cone.boundary_shell(1.0, 1)) nodes.push_back(angle_of(p));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto g = [&](double th) { return body.level(make_vec({R * std::cos(th), R * std::sin(th)})); };
  std::vector<Vec> pts;
  for (double th : sign_change_roots(g, nodes)) pts.push_back(make_vec({R * std::cos(th), R * std::sin(th)}));
  // The node list wraps past the seam, so a crossing may be found twice.
  std::vector<Vec> unique;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : unique) dup = dup || (p - q).norm() <= 1e-12 * R;
    if (!dup) unique.push_back(p);
  }
  return unique;
}

Vec sphere_point(double R, double phi, double psi) {
  return make_vec({R * std::sin(psi) * std::cos(phi), R * std::sin(psi) * std::sin(phi), R * std::cos(psi)});
}

// A piece of a curve on the sphere with a parameter range and samples.
struct Arc {
  std::function<Vec(double)> eval;
  double lo = 0.0, hi = 0.0;
  bool periodic = false;
  std::vector<double> params;
  std::vector<Vec> pts;
};

Arc make_arc(std::function<Vec(double)> eval, double lo, double hi, int n, bool periodic) {
  Arc arc;
  arc.eval = std::move(eval);
  arc.lo = lo;
  arc.hi = hi;
  arc.periodic = periodic;
  const int count = hi > lo ? n : 1;
  for (int k = 0; k < count; ++k) {
    const double s = count == 1 ? lo : lo + (hi - lo) * k / (periodic ? n : n - 1);
    arc.params.push_back(s);
    arc.pts.push_back(arc.eval(s));
  }
  return arc;
}

// Boundary of a 3D cone on S_R as explicit arcs.
std::vector<Arc> cone_arcs(const ConeDescriptor& cone, double R) {
  std::vector<Arc> arcs;
  constexpr double pi = std::numbers::pi;
  switch (cone.kind()) {
    case ConeDescriptor::Kind::trivial: break;
    case ConeDescriptor::Kind::ray:
      arcs.push_back(make_arc([R](double) { return make_vec({0.0, 0.0, R}); }, 0.0, 0.0, 1, false));
      break;
    case ConeDescriptor::Kind::elliptic: {
      const double c1 = cone.slopes()[0], c2 = cone.slopes()[1];
      arcs.push_back(make_arc(
          [=](double th) { return Vec(R * make_vec({std::cos(th) / c1, std::sin(th) / c2, 1.0}).normalized()); },
          0.0, 2.0 * pi, kSphereNodes, true));
      break;
    }
    case ConeDescriptor::Kind::orthant: {
      arcs.push_back(make_arc([R](double p) { return make_vec({0.0, -R * std::sin(p), R * std::cos(p)}); },
                              0.0, 0.5 * pi, kSphereNodes / 4 + 1, false));
      arcs.push_back(make_arc([R](double p) { return make_vec({-R * std::sin(p), 0.0, R * std::cos(p)}); },
                              0.0, 0.5 * pi, kSphereNodes / 4 + 1, false));
      arcs.push_back(make_arc([R](double p) { return make_vec({-R * std::cos(p), -R * std::sin(p), 0.0}); },
                              0.0, 0.5 * pi, kSphereNodes / 4 + 1, false));
      break;
    }
  }
  return arcs;
}

// Root of g near psi0 by outward bracketing and bisection; nullopt if none.
template <class G>
std::optional<double> local_root(G&& g, double psi0, double width) {
  double a = std::max(0.0, psi0 - width), b = std::min(std::numbers::pi, psi0 + width);
  for (int grow = 0; grow < 8 && (g(a) < 0.0) == (g(b) < 0.0); ++grow) {
    width *= 2.0;
    a = std::max(0.0, psi0 - width);
    b = std::min(std::numbers::pi, psi0 + width);
  }
  const bool a_inside = g(a) < 0.0;
  if (a_inside == (g(b) < 0.0)) return std::nullopt;
  for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon(); ++it) {
    const double m = 0.5 * (a + b);
    if ((g(m) < 0.0) == a_inside) a = m; else b = m;
  }
  return 0.5 * (a + b);
}

// Boundary of a 3D body on S_R. With exactly one crossing per meridian the
// curve is parameterized by azimuth; otherwise only the samples are kept.
std::vector<Arc> body_arcs(const BodySpec& body, double R, bool& parametric) {
  std::vector<double> phis(kSphereNodes);
  for (int k = 0; k < kSphereNodes; ++k) phis[k] = 2.0 * std::numbers::pi * k / kSphereNodes;
  std::vector<double> grid;
  for (int k = 0; k <= kSphereNodes; ++k) grid.push_back(std::numbers::pi * k / kSphereNodes);
  std::vector<std::vector<double>> roots(phis.size());
  parallel_for(phis.size(), [&](std::size_t k) {
    auto g = [&](double psi) { return body.level(sphere_point(R, phis[k], psi)); };
    roots[k] = sign_change_roots(g, grid);
  });

  parametric = true;
  bool any = false;
  for (const auto& r : roots) {
    parametric = parametric && r.size() == 1;
    any = any || !r.empty();
  }
  std::vector<Arc> arcs;
  if (!any) return arcs;
  if (!parametric) {
    Arc arc;
    for (std::size_t k = 0; k < phis.size(); ++k) {
      for (double psi : roots[k]) {
        arc.params.push_back(phis[k]);
        arc.pts.push_back(sphere_point(R, phis[k], psi));
      }
    }
    arcs.push_back(std::move(arc));
    return arcs;
  }
  std::vector<double> psis;
  for (const auto& r : roots) psis.push_back(r.front());
  const double step = std::numbers::pi / kSphereNodes;
  Arc arc;
  arc.lo = 0.0;
  arc.hi = 2.0 * std::numbers::pi;
  arc.periodic = true;
  arc.params = phis;
  for (std::size_t k = 0; k < phis.size(); ++k) arc.pts.push_back(sphere_point(R, phis[k], psis[k]));
  arc.eval = [&body, R, psis, step](double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phi, two_pi);
    if (w < 0.0) w += two_pi;
    const auto k = static_cast<std::size_t>(std::lround(w / two_pi * kSphereNodes)) % psis.size();
    auto g = [&](double psi) { return body.level(sphere_point(R, w, psi)); };
    const auto psi = local_root(g, psis[k], 2.0 * step);
    return sphere_point(R, w, psi ? *psi : psis[k]);
  };
  arcs.push_back(std::move(arc));
  return arcs;
}

struct Nearest {
  std::size_t arc = 0, index = 0;
  double dist = std::numeric_limits<double>::infinity();
};

Nearest nearest_sample(const Vec& p, const std::vector<Arc>& arcs) {
  Nearest n;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t i = 0; i < arcs[a].pts.size(); ++i) {
      const double d = (p - arcs[a].pts[i]).norm();
      if (d < n.dist) n = Nearest{a, i, d};
    }
  }
  return n;
}

// Parameter window around sample i of an arc.
std::pair<double, double> window(const Arc& arc, std::size_t i) {
  const std::size_t n = arc.params.size();
  if (n == 1) return {arc.params[0], arc.params[0]};
  const double step = arc.periodic ? (arc.hi - arc.lo) / static_cast<double>(n)
                                   : (arc.hi - arc.lo) / static_cast<double>(n - 1);
  double a = arc.params[i] - step, b = arc.params[i] + step;
  if (!arc.periodic) {
    a = std::max(a, arc.lo);
    b = std::min(b, arc.hi);
  }
  return {a, b};
}

constexpr int kBrentBits = 40;

// Distance from p to the curve. The foot point is refined on the arc
// parameter by bisecting <c(s) - p, c'(s)> = 0, which stays accurate when the
// distance itself is far below the parameter resolution of a direct minimizer.
double curve_distance(const Vec& p, const std::vector<Arc>& arcs) {
  const Nearest n = nearest_sample(p, arcs);
  const Arc& arc = arcs[n.arc];
  if (!arc.eval) return n.dist;
  auto [a, b] = window(arc, n.index);
  if (!(b > a)) return n.dist;
  const double h = 1e-6 * (b - a);
  auto slope = [&](double s) {
    return (arc.eval(s) - p).dot(arc.eval(s + h) - arc.eval(s - h));
  };
  double best = std::min({n.dist, (p - arc.eval(a)).norm(), (p - arc.eval(b)).norm()});
  if (slope(a) < 0.0 && slope(b) > 0.0) {
    for (int it = 0; it < 100 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)); ++it) {
      const double m = 0.5 * (a + b);
      if (slope(m) < 0.0) a = m; else b = m;
    }
    best = std::min(best, (p - arc.eval(0.5 * (a + b))).norm());
  }
  return best;
}

// sup over the `from` curve of the distance to the `to` curve.
double directed_curves(const std::vector<Arc>& from, const std::vector<Arc>& to) {
  struct Cand {
    double d;
    std::size_t arc, index;
  };
  std::vector<Cand> cands;
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t i = 0; i < from[a].pts.size(); ++i) {
      cands.push_back(Cand{curve_distance(from[a].pts[i], to), a, i});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.d > y.d; });
  double best = cands.empty() ? 0.0 : cands.front().d;
  for (std::size_t c = 0; c < std::min<std::size_t>(4, cands.size()); ++c) {
    const Arc& arc = from[cands[c].arc];
    if (!arc.eval) continue;
    const auto [a, b] = window(arc, cands[c].index);
    if (!(b > a)) continue;
    auto f = [&](double s) { return -curve_distance(arc.eval(s), to); };
    const auto res = boost::math::tools::brent_find_minima(f, a, b, kBrentBits);
    best = std::max(best, -res.second);
  }
  return best;
}

double directed_points(const std::vector<Vec>& from, const std::vector<Vec>& to) {
  double worst = 0.0;
  for (const Vec& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& q : to) best = std::min(best, (p - q).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

double max_gap(const std::vector<Vec>& pts) {
  double gap = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) best = std::min(best, (pts[i] - pts[j]).norm());
    }
    if (std::isfinite(best)) gap = std::max(gap, best);
  }
  return gap;
}

}  // namespace

void validate_radii(std::span<const double> radii) {
  if (radii.size() < 4) fail(ErrorCode::InvalidArgument, "need at least 4 radii");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (!(radii[i] < radii[i + 1])) fail(ErrorCode::InvalidArgument, "radii must increase");
  }
  if (!(radii.front() > 0.0) || !(radii.back() >= 100.0 * radii.front())) {
    fail(ErrorCode::InvalidArgument, "radii must be positive and span two decades");
  }
}

std::string_view to_string(AsymptoticVerdict v) {
  switch (v) {
    case AsymptoticVerdict::asymptotic: return "asymptotic";
    case AsymptoticVerdict::not_asymptotic: return "not_asymptotic";
    case AsymptoticVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ShellDistance shell_distance(const BodySpec& body, const ConeDescriptor& cone, double R) {
  if (cone.dim() != body.dim()) fail(ErrorCode::InvalidArgument, "cone and body dimensions differ");
  const double min_r = 10.0 * (body.translation().norm() + 1.0);
  if (!(R >= min_r)) {
    fail(ErrorCode::InvalidArgument, "radius must be at least " + std::to_string(min_r));
  }

  ShellDistance out;
  out.R = R;
  if (body.dim() == 2) {
    const std::vector<Vec> body_pts = circle_boundary(body, cone, R);
    const std::vector<Vec> cone_pts = cone.boundary_shell(R, 1);
    if (body_pts.empty()) fail(ErrorCode::EmptyShellIntersection, "body boundary misses the circle of radius " + std::to_string(R));
    if (cone_pts.empty()) fail(ErrorCode::EmptyShellIntersection, "cone boundary misses the circle (trivial cone)");
    out.body_to_cone = directed_points(body_pts, cone_pts);
    out.cone_to_body = directed_points(cone_pts, body_pts);
    out.err = 1e-12 * R;
    out.n_body_points = static_cast<int>(body_pts.size());
    out.n_cone_points = static_cast<int>(cone_pts.size());
  } else {
    bool parametric = false;
    const std::vector<Arc> body_curve = body_arcs(body, R, parametric);
    const std::vector<Arc> cone_curve = cone_arcs(cone, R);
    if (body_curve.empty()) fail(ErrorCode::EmptyShellIntersection, "body boundary misses the sphere of radius " + std::to_string(R));
    if (cone_curve.empty()) fail(ErrorCode::EmptyShellIntersection, "cone boundary misses the sphere (trivial cone)");
    out.body_to_cone = directed_curves(body_curve, cone_curve);
    out.cone_to_body = directed_curves(cone_curve, body_curve);
    std::vector<Vec> body_pts;
    for (const Arc& arc : body_curve) body_pts.insert(body_pts.end(), arc.pts.begin(), arc.pts.end());
    int n_cone = 0;
    for (const Arc& arc : cone_curve) n_cone += static_cast<int>(arc.pts.size());
    // Refined curves leave only the Brent tolerance; raw samples leave half the gap.
    out.err = parametric ? 1e-9 * R : 0.5 * max_gap(body_pts);
    out.n_body_points = static_cast<int>(body_pts.size());
    out.n_cone_points = n_cone;
  }
  out.d_asym = std::max(out.body_to_cone, out.cone_to_body);
  out.d_blowdown = out.d_asym / R;
  return out;
}

AsymptoticVerdict classify_trend(std::span<const ShellDistance> r) {
  const std::size_t n = r.size();
  if (n < 3) fail(ErrorCode::InvalidArgument, "need at least 3 shell distances");
  bool all_zero = true, decreasing = true;
  for (std::size_t i = 0; i < n; ++i) {
    all_zero = all_zero && r[i].d_asym <= 1e-12 * r[i].R;
    if (i > 0) decreasing = decreasing && r[i].d_asym < r[i - 1].d_asym;
  }
  if (all_zero || (decreasing && r[n - 1].d_asym < 0.1 * r[0].d_asym)) return AsymptoticVerdict::asymptotic;
  if (r[n - 3].d_asym <= r[n - 2].d_asym && r[n - 2].d_asym <= r[n - 1].d_asym) {
    return AsymptoticVerdict::not_asymptotic;
  }
  return AsymptoticVerdict::inconclusive;
}

AsymptoticReport asymptotic_diagnostic(const BodySpec& body, std::span<const double> radii) {
  validate_radii(radii);

  const ConeDescriptor cone = body.recession_cone();
  AsymptoticReport rep;
  rep.rows.resize(radii.size());
  parallel_for(radii.size(), [&](std::size_t i) { rep.rows[i] = shell_distance(body, cone, radii[i]); });

  rep.verdict = classify_trend(rep.rows);
  return rep;
}

ShellDistance blowdown_shell(const BodySpec& body, double R) {
  const BodySpec shifted = body.translated(-body.translation());
  return shell_distance(shifted, body.recession_cone(), R);
}

double blowdown_check(const BodySpec& body, double R) { return blowdown_shell(body, R).d_blowdown; }

}  // namespace convsec
