#include "convsec/sections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>
#include <boost/math/tools/minima.hpp>

#include "convsec/bodies.hpp"
#include "convsec/error.hpp"

namespace convsec {

namespace {

constexpr int kMaxPolarNodes = 1 << 16;

// Minimizer of a convex function of one variable: expand a bracket from s0
// with doubling steps, then Brent.
template <class F>
std::pair<double, double> minimize_convex(F&& phi, double s0, double h) {
  const double f0 = phi(s0);
  double dir = 0.0;
  if (phi(s0 + h) < f0) dir = 1.0;
  else if (phi(s0 - h) < f0) dir = -1.0;

  double lo = s0 - h, hi = s0 + h;
  if (dir != 0.0) {
    double prev = s0, cur = s0 + dir * h, fcur = phi(cur);
    double step = h;
    for (int it = 0; it < 400; ++it) {
      step *= 2.0;
      const double next = s0 + dir * step;
      const double fnext = phi(next);
      if (!(fnext < fcur)) {
        lo = std::min(prev, next);
        hi = std::max(prev, next);
        break;
      }
      prev = cur;
      cur = next;
      fcur = fnext;
      if (it == 399) fail(ErrorCode::DegenerateSection, "defining function unbounded below on section");
    }
  }
  const auto r = boost::math::tools::brent_find_minima(phi, lo, hi, 40);
  return {r.first, r.second};
}

}  // namespace

bool section_bounded(const ConvexSet& set, const Vec& u) {
  return set.recession_cone().meets_hyperplane_trivially(u);
}

Interval admissible_levels(const ConvexSet& set, const Vec& u) {
  if (!section_bounded(set, u)) {
    fail(ErrorCode::UnboundedSection, "sections with this normal are unbounded");
  }
  return {-set.support(-u), set.support(u)};
}

std::vector<Vec> plane_basis(const Vec& u) {
  if (u.size() == 2) return {make_vec({-u(1), u(0)})};
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(u(i)) < std::abs(u(axis))) axis = i;
  }
  Vec e = unit_axis(3, axis);
  Vec w1 = (e - e.dot(u) * u).normalized();
  Eigen::Vector3d a = u, b = w1;
  Vec w2 = a.cross(b);
  return {w1, w2};
}

Vec section_anchor(const ConvexSet& set, const Vec& u, double t) {
  const Vec q = set.interior_point();
  const Vec p0 = q + (t - u.dot(q)) * u;
  const auto basis = plane_basis(u);
  const double h = set.length_scale();

  if (basis.size() == 1) {
    const Vec& w = basis[0];
    const auto [s, f] = minimize_convex([&](double s) { return set.level(p0 + s * w); }, 0.0, h);
    (void)f;
    return p0 + s * w;
  }

  const Vec& w1 = basis[0];
  const Vec& w2 = basis[1];
  auto inner = [&](double s1) {
    const Vec base = p0 + s1 * w1;
    return minimize_convex([&](double s2) { return set.level(base + s2 * w2); }, 0.0, h);
  };
  const auto [s1, g] = minimize_convex([&](double s1) { return inner(s1).second; }, 0.0, h);
  (void)g;
  return p0 + s1 * w1 + inner(s1).first * w2;
}

SectionStats section_stats(const ConvexSet& set, const Vec& u, double t, double rel_tol) {
  const int dim = set.dim();
  if (u.size() != dim || !is_unit(u)) fail(ErrorCode::InvalidArgument, "normal must be a unit vector");
  if (!(rel_tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");

  const Interval levels = admissible_levels(set, u);
  const double scale = set.length_scale();
  const double buffer = 1e-9 * std::max(1.0, scale);
  if (!(ExtReal(t - buffer) > levels.lo && ExtReal(t + buffer) < levels.hi)) {
    std::ostringstream os;
    os << "level " << t << " outside (" << levels.lo.to_string() << ", " << levels.hi.to_string()
       << ") minus endpoint buffer";
    fail(ErrorCode::LevelOutOfRange, os.str());
  }

  SectionStats out;
  out.u = u;
  out.t = t;

  Vec anchor = section_anchor(set, u, t);
  if (!(set.level(anchor) < 0.0)) {
    fail(ErrorCode::DegenerateSection, "section has empty relative interior");
  }
  const auto basis = plane_basis(u);

  auto hit = [&](const Vec& origin, const Vec& dir) {
    ++out.n_evals;
    return boundary_hit_unchecked(set, origin, dir, false).value();
  };

  if (dim == 2) {
    const Vec& w = basis[0];
    const double tp = hit(anchor, w);
    const double tm = hit(anchor, -w);
    out.measure = tp + tm;
    if (out.measure < 1e-12 * scale) fail(ErrorCode::DegenerateSection, "section length below threshold");
    out.centroid = anchor + 0.5 * (tp - tm) * w;
    out.err_estimate = 1e-12 * out.measure;
    out.centroid_err = 0.5 * out.err_estimate;
    out.diameter = out.measure;
    return out;
  }

  // Recentre the anchor on chord midpoints so the polar radius is well
  // conditioned.
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vec& w : basis) {
      const double tp = hit(anchor, w);
      const double tm = hit(anchor, -w);
      anchor += 0.5 * (tp - tm) * w;
    }
  }
  const Vec& w1 = basis[0];
  const Vec& w2 = basis[1];

  std::vector<double> r;
  auto radius_at = [&](int k, int n) {
    const double th = 2.0 * std::numbers::pi * k / n;
    return hit(anchor, std::cos(th) * w1 + std::sin(th) * w2);
  };
  auto sums = [&](int n, double& area, double& m1, double& m2) {
    double s2 = 0.0, c3 = 0.0, s3 = 0.0;
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n;
      const double rk = r[static_cast<std::size_t>(k)];
      s2 += rk * rk;
      c3 += rk * rk * rk * std::cos(th);
      s3 += rk * rk * rk * std::sin(th);
    }
    area = std::numbers::pi / n * s2;
    m1 = 2.0 * std::numbers::pi / (3.0 * n) * c3;
    m2 = 2.0 * std::numbers::pi / (3.0 * n) * s3;
  };

  int n = 32;
  r.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = radius_at(k, n);
  double area = 0.0, m1 = 0.0, m2 = 0.0;
  sums(n, area, m1, m2);

  double d_area = 0.0, d_mom = 0.0;
  for (;;) {
    // Double the node count, keeping the old nodes at even indices.
    std::vector<double> r2(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
      r2[static_cast<std::size_t>(2 * k)] = r[static_cast<std::size_t>(k)];
      r2[static_cast<std::size_t>(2 * k + 1)] = radius_at(2 * k + 1, 2 * n);
    }
    r.swap(r2);
    n *= 2;
    double a2 = 0.0, n1 = 0.0, n2 = 0.0;
    sums(n, a2, n1, n2);
    d_area = std::abs(a2 - area);
    d_mom = std::hypot(n1 - m1, n2 - m2);
    area = a2;
    m1 = n1;
    m2 = n2;

    double diam = 0.0;
    for (int k = 0; k < n / 2; ++k) {
      diam = std::max(diam, r[static_cast<std::size_t>(k)] + r[static_cast<std::size_t>(k + n / 2)]);
    }
    out.diameter = diam;
    const bool converged =
        d_area <= rel_tol * area && d_mom <= rel_tol * area * diam;
    if (converged || n >= kMaxPolarNodes) break;
  }

  if (area < 1e-12 * scale * scale) fail(ErrorCode::DegenerateSection, "section area below threshold");
  out.measure = area;
  out.centroid = anchor + (m1 / area) * w1 + (m2 / area) * w2;
  out.err_estimate = d_area + 2e-12 * area;
  out.centroid_err = d_mom / area + 1e-12 * out.diameter;
  return out;
}

}  // namespace convsec
