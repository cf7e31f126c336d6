#include <algorithm>
#include <cmath>
#include <limits>

#include "convsec/bodies.hpp"
#include "convsec/error.hpp"

namespace convsec {

bool interior_with_margin(const ConvexSet& set, const Vec& origin) {
  if (!(set.level(origin) < 0.0)) return false;
  const double eps = 1e-6 * set.length_scale();
  for (int i = 0; i < set.dim(); ++i) {
    Vec p = origin;
    p(i) += eps;
    if (!set.contains(p)) return false;
    p(i) -= 2.0 * eps;
    if (!set.contains(p)) return false;
  }
  return true;
}

ExtReal boundary_hit_unchecked(const ConvexSet& set, const Vec& origin, const Vec& dir,
                               bool check_recession) {
  if (check_recession && set.recession_cone().contains_direction(dir)) {
    return ExtReal::pos_inf();
  }

  // Geometric bracketing: [lo, hi] with origin + lo*dir inside, + hi*dir outside.
  double lo = 0.0;
  double hi = set.length_scale();
  while (set.contains(origin + hi * dir)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) return ExtReal::pos_inf();
  }
  while (hi - lo > 1e-12 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (set.contains(origin + mid * dir)) lo = mid; else hi = mid;
  }
  // One secant step inside the final bracket.
  const double flo = set.level(origin + lo * dir);
  const double fhi = set.level(origin + hi * dir);
  if (flo <= 0.0 && fhi > 0.0) {
    const double t = lo + (hi - lo) * (-flo / (fhi - flo));
    if (t >= lo && t <= hi) return t;
  }
  return 0.5 * (lo + hi);
}

ExtReal boundary_hit(const ConvexSet& set, const Vec& origin, const Vec& dir) {
  if (origin.size() != set.dim() || dir.size() != set.dim()) {
    fail(ErrorCode::InvalidArgument, "dimension mismatch");
  }
  if (!is_unit(dir)) fail(ErrorCode::InvalidArgument, "direction must be a unit vector");
  if (!interior_with_margin(set, origin)) {
    fail(ErrorCode::NotInterior, "ray origin is not strictly inside the set");
  }
  return boundary_hit_unchecked(set, origin, dir);
}

ExtReal gauge(const ConvexSet& set, const Vec& x) {
  if (x.size() != set.dim()) fail(ErrorCode::InvalidArgument, "dimension mismatch");
  if (!interior_with_margin(set, Vec::Zero(set.dim()))) {
    fail(ErrorCode::OriginNotInterior, "gauge needs the origin in the interior");
  }
  const double r = x.norm();
  if (r == 0.0) return 0.0;
  if (set.recession_cone().contains_direction(x)) return 0.0;

  // x in lambda K  <=>  x / lambda in K, monotone in lambda.
  auto inside = [&](double lam) { return set.contains(x / lam); };
  double hi = 1.0;
  while (!inside(hi)) {
    hi *= 2.0;
    if (hi > 1e300) return ExtReal::pos_inf();
  }
  double lo = hi;
  while (inside(lo)) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (inside(mid)) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace convsec
