#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "catalog.hpp"
#include "convsec/bodies.hpp"
#include "convsec/centroids.hpp"
#include "convsec/cutvol.hpp"
#include "convsec/error.hpp"
#include "convsec/parallel.hpp"
#include "convsec/sampling.hpp"
#include "convsec/sections.hpp"

namespace convsec::testing {
namespace {

struct Outcome {
  bool ok = true;
  double stat = 0.0;
  std::string what;
  bool skipped = false;
};

template <class Task>
PropertyResult evaluate(std::string name, const std::vector<Task>& tasks,
                        const std::function<Outcome(const Task&)>& eval) {
  std::vector<Outcome> out(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    try {
      out[i] = eval(tasks[i]);
    } catch (const std::exception& e) {
      out[i] = {false, 0.0, std::string("exception: ") + e.what()};
    }
  });
  PropertyResult r;
  r.name = std::move(name);
  for (const Outcome& o : out) {
    if (o.skipped) continue;
    ++r.samples;
    r.worst = std::max(r.worst, o.stat);
    if (!o.ok) {
      if (r.failures == 0) r.first_failure = o.what;
      ++r.failures;
    }
  }
  return r;
}

std::string describe(const Vec& v) {
  std::ostringstream os;
  os.precision(10);
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

Vec random_in_ball(Rng& rng, int dim) {
  return rng.unit_vector(dim) * std::pow(rng.uniform(), 1.0 / dim);
}

// Rejection sample from a box around the interior point.
Vec member_point(const BodySpec& body, Rng& rng) {
  const Vec c = body.interior_point();
  const double s = 3.0 * body.length_scale();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vec x(body.dim());
    for (int i = 0; i < body.dim(); ++i) x(i) = c(i) + rng.uniform(-s, s);
    if (body.contains(x)) return x;
  }
  return c;
}

const Vec& pick(const std::vector<Vec>& v, Rng& rng) {
  return v[static_cast<std::size_t>(rng.uniform() * static_cast<double>(v.size()))];
}

double random_level(const Interval& I, double scale, Rng& rng) {
  if (I.bounded()) {
    const double lo = I.lo.value(), hi = I.hi.value();
    const double m = 1e-3 * (hi - lo);
    return rng.uniform(lo + m, hi - m);
  }
  return I.lo.value() + scale * std::pow(10.0, rng.uniform(-2.0, 1.0));
}

}  // namespace

PropertyResult prop_convexity(long n, std::uint64_t seed) {
  const auto bodies = catalog();
  struct Task { int body; Vec x, y; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int b = static_cast<int>(i % static_cast<long>(bodies.size()));
    tasks.push_back({b, member_point(bodies[b].body, rng), member_point(bodies[b].body, rng)});
  }
  return evaluate<Task>("bodies.convexity", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    const Vec mid = 0.5 * (t.x + t.y);
    const double f = body.level(mid);
    Outcome o{f <= 0.0, std::max(0.0, f), {}};
    if (!o.ok) o.what = bodies[t.body].name + ": midpoint " + describe(mid) + " outside";
    return o;
  });
}

PropertyResult prop_support_duality(long n, std::uint64_t seed) {
  const auto bodies = catalog();
  struct Task { int body; Vec x, u; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int b = static_cast<int>(i % static_cast<long>(bodies.size()));
    const BodySpec& body = bodies[b].body;
    Vec x = member_point(body, rng);
    tasks.push_back({b, x, rng.unit_vector(body.dim())});
  }
  return evaluate<Task>("bodies.support_duality", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    const ExtReal h = body.support(t.u);
    if (!h.is_finite()) return Outcome{!h.is_neg_inf(), 0.0, "support is -inf"};
    const double excess = t.u.dot(t.x) - h.value();
    Outcome o{excess <= 1e-10, std::max(0.0, excess), {}};
    if (!o.ok) {
      o.what = bodies[t.body].name + ": <u,x> exceeds h(u) by " + std::to_string(excess) +
               " at u=" + describe(t.u);
    }
    return o;
  });
}

PropertyResult prop_gauss_round_trip(long n, std::uint64_t seed) {
  std::vector<NamedBody> bodies;
  for (auto& nb : catalog()) {
    if (nb.body.kind() != BodyKind::circular_cone) bodies.push_back(nb);
  }
  struct Task { int body; Vec u; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int b = static_cast<int>(i % static_cast<long>(bodies.size()));
    const BodySpec& body = bodies[b].body;
    Vec u = rng.unit_vector(body.dim());
    for (int attempt = 0; !body.admits_normal(u) && attempt < 10000; ++attempt) {
      u = rng.unit_vector(body.dim());
    }
    tasks.push_back({b, u});
  }
  return evaluate<Task>("bodies.gauss_round_trip", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    if (!body.admits_normal(t.u)) return Outcome{false, 0.0, bodies[t.body].name + ": no admissible normal drawn"};
    const Vec p = body.inverse_gauss(t.u);
    const Vec back = body.outer_normal(p);
    const double d = (back - t.u).norm();
    const ExtReal h = body.support(t.u);
    const double gap = h.is_finite() ? std::abs(t.u.dot(p) - h.value()) : 1.0;
    const bool ok = d <= 1e-8 && gap <= 1e-10 * std::max(1.0, std::abs(h.to_double()));
    Outcome o{ok, d, {}};
    if (!ok) {
      o.what = bodies[t.body].name + ": u=" + describe(t.u) + " normal error " +
               std::to_string(d) + ", support gap " + std::to_string(gap);
    }
    return o;
  });
}

PropertyResult prop_boundary_hit(long n, std::uint64_t seed) {
  const auto bodies = catalog();
  struct Task { int body; Vec origin, dir; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int b = static_cast<int>(i % static_cast<long>(bodies.size()));
    const BodySpec& body = bodies[b].body;
    Vec o = body.interior_point() + 0.3 * body.length_scale() * random_in_ball(rng, body.dim());
    if (!interior_with_margin(body, o)) o = body.interior_point();
    tasks.push_back({b, o, rng.unit_vector(body.dim())});
  }
  return evaluate<Task>("bodies.boundary_hit", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    const ExtReal hit = boundary_hit(body, t.origin, t.dir);
    if (hit.is_pos_inf()) {
      const bool ok = body.recession_cone().contains_direction(t.dir);
      return Outcome{ok, 0.0, ok ? "" : bodies[t.body].name + ": +inf hit off the recession cone"};
    }
    const double s = hit.value();
    const double f = body.level(t.origin + s * t.dir);
    const bool inside = body.contains(t.origin + 0.999 * s * t.dir);
    Outcome o{std::abs(f) <= 1e-10 && inside, std::abs(f), {}};
    if (!o.ok) {
      o.what = bodies[t.body].name + ": dir=" + describe(t.dir) + " t=" + std::to_string(s) +
               " |F|=" + std::to_string(std::abs(f)) + (inside ? "" : " (0.999 t outside)");
    }
    return o;
  });
}

PropertyResult prop_recession_limit(long n, std::uint64_t seed) {
  const auto bodies = catalog();
  struct Task { int body; Vec v; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int b = static_cast<int>(i % static_cast<long>(bodies.size()));
    const BodySpec& body = bodies[b].body;
    const ConeDescriptor cone = body.recession_cone();
    Vec v;
    if (cone.kind() == ConeDescriptor::Kind::ray && (i / bodies.size()) % 2 == 0) {
      v = unit_axis(body.dim(), body.dim() - 1);
    } else {
      // Directions within 1e-2 of the cone boundary are out of reach of a
      // finite T and are redrawn.
      do {
        v = rng.unit_vector(body.dim());
      } while (cone.kind() != ConeDescriptor::Kind::trivial && std::abs(cone.level(v)) < 1e-2);
    }
    tasks.push_back({b, v});
  }
  return evaluate<Task>("bodies.recession_limit", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    const bool in_cone = body.recession_cone().contains_direction(t.v);
    const bool far_member = body.contains(body.interior_point() + 1e6 * t.v);
    Outcome o{in_cone == far_member, 0.0, {}};
    if (!o.ok) {
      o.what = bodies[t.body].name + ": v=" + describe(t.v) + (in_cone ? " in" : " not in") +
               " cone but limit test says " + (far_member ? "member" : "outside");
    }
    return o;
  });
}

PropertyResult prop_section_invariants(long n, std::uint64_t seed) {
  const auto bodies = catalog();
  std::vector<std::vector<Vec>> normals;
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    normals.push_back(sample_section_normals(bodies[b].body, 32, seed + b));
  }
  struct Task { int body; Vec u; double t; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int b = static_cast<int>(i % static_cast<long>(bodies.size()));
    const BodySpec& body = bodies[b].body;
    const Vec& u = pick(normals[b], rng);
    tasks.push_back({b, u, random_level(admissible_levels(body, u), body.length_scale(), rng)});
  }
  return evaluate<Task>("sections.invariants", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    const SectionStats s = section_stats(body, t.u, t.t);
    const double off = std::abs(t.u.dot(s.centroid) - t.t);
    const bool ok = off <= 1e-9 * std::max(1.0, std::abs(t.t)) && s.measure > 0.0 &&
                    body.contains(s.centroid);
    Outcome o{ok, off, {}};
    if (!ok) {
      o.what = bodies[t.body].name + ": u=" + describe(t.u) + " t=" + std::to_string(t.t) +
               " centroid " + describe(s.centroid);
    }
    return o;
  });
}

namespace {

struct AffineCase {
  std::string name;
  BodySpec body;
  Mat M;
  Vec b;
  BodySpec image;
};

Mat diag(std::initializer_list<double> d) {
  const Vec v = make_vec(d);
  return v.asDiagonal();
}

std::vector<AffineCase> affine_cases() {
  std::vector<AffineCase> out;
  {
    const BodySpec e = BodySpec::ellipsoid({2.0, 0.7}, make_vec({0.3, -0.2}));
    const Mat M = diag({1.5, 0.4});
    const Vec b = make_vec({1.0, -2.0});
    out.push_back({"ellipse scale", e, M, b,
                   BodySpec::ellipsoid({3.0, 0.28}, M * e.translation() + b)});
  }
  {
    const BodySpec e = BodySpec::ellipsoid({2.0, 1.0, 1.5}, make_vec({0.1, 0.2, -0.3}));
    const Mat M = diag({0.5, 2.0, 1.2});
    const Vec b = make_vec({-1.0, 0.5, 2.0});
    out.push_back({"ellipsoid scale", e, M, b,
                   BodySpec::ellipsoid({1.0, 2.0, 1.8}, M * e.translation() + b)});
  }
  {
    // (x, y) -> (x + bx, y + s x + by) maps y >= x^2 onto a translated parabola.
    const double s = 0.7;
    Mat M = Mat::Identity(2, 2);
    M(1, 0) = s;
    const Vec b = make_vec({0.4, -1.0});
    out.push_back({"parabola shear", BodySpec::paraboloid(2, {1.0}), M, b,
                   BodySpec::paraboloid(2, {1.0}, make_vec({b(0) - s / 2, b(1) - s * s / 4}))});
  }
  {
    const std::vector<double> q = {1.0, 2.0};
    const Vec t0 = make_vec({0.5, 0.0, -1.0});
    const double s1 = 0.6, s2 = -1.1;
    Mat M = Mat::Identity(3, 3);
    M(2, 0) = s1;
    M(2, 1) = s2;
    const Vec b = make_vec({0.3, -0.4, 0.8});
    const Vec t1 = make_vec({
        b(0) + t0(0) - s1 / (2 * q[0]),
        b(1) + t0(1) - s2 / (2 * q[1]),
        t0(2) + b(2) + s1 * t0(0) + s2 * t0(1) - s1 * s1 / (4 * q[0]) - s2 * s2 / (4 * q[1]),
    });
    out.push_back({"paraboloid shear", BodySpec::paraboloid(3, q, t0), M, b,
                   BodySpec::paraboloid(3, q, t1)});
  }
  {
    // (x, y, z) -> (2x, y/2, 1.5z): z >= x^2 + 2y^2 becomes z' >= 0.375 x'^2 + 12 y'^2.
    const BodySpec p = BodySpec::paraboloid(3, {1.0, 2.0}, make_vec({0.5, 0.0, -1.0}));
    const Mat M = diag({2.0, 0.5, 1.5});
    const Vec b = make_vec({-0.2, 0.1, 0.3});
    out.push_back({"paraboloid scale", p, M, b,
                   BodySpec::paraboloid(3, {1.5 / 4.0, 2.0 * 1.5 / 0.25}, M * p.translation() + b)});
  }
  {
    const BodySpec h = BodySpec::hyperboloid_sheet(2, {1.0});
    const Mat M = diag({1.7, 1.0});
    const Vec b = make_vec({0.5, 2.0});
    out.push_back({"hyperbola scale", h, M, b, BodySpec::hyperboloid_sheet(2, {1.7}, b)});
  }
  {
    const BodySpec h = BodySpec::hyperboloid_sheet(3, {1.0, 1.5});
    const Mat M = diag({0.6, 1.3, 1.0});
    const Vec b = make_vec({1.0, -1.0, 0.5});
    out.push_back({"hyperboloid scale", h, M, b, BodySpec::hyperboloid_sheet(3, {0.6, 1.95}, b)});
  }
  return out;
}

}  // namespace

PropertyResult prop_affine_equivariance(long n, std::uint64_t seed) {
  const auto cases = affine_cases();
  std::vector<std::vector<Vec>> normals;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    normals.push_back(sample_section_normals(cases[c].body, 32, seed + c));
  }
  struct Task { int c; Vec u; double t; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int c = static_cast<int>(i % static_cast<long>(cases.size()));
    const Vec& u = pick(normals[c], rng);
    tasks.push_back({c, u, random_level(admissible_levels(cases[c].body, u),
                                        cases[c].body.length_scale(), rng)});
  }
  return evaluate<Task>("sections.affine_equivariance", tasks, [&](const Task& t) {
    const AffineCase& ac = cases[t.c];
    const Vec w = ac.M.transpose().inverse() * t.u;
    const Vec u2 = w / w.norm();
    const double t2 = (t.t + w.dot(ac.b)) / w.norm();
    const Vec c1 = section_stats(ac.body, t.u, t.t).centroid;
    const Vec c2 = section_stats(ac.image, u2, t2).centroid;
    const Vec expected = ac.M * c1 + ac.b;
    const double d = (c2 - expected).norm();
    Outcome o{d <= 1e-7 * std::max(1.0, expected.norm()), d, {}};
    if (!o.ok) {
      o.what = ac.name + ": u=" + describe(t.u) + " t=" + std::to_string(t.t) +
               " mismatch " + std::to_string(d);
    }
    return o;
  });
}

PropertyResult prop_cone_scaling(long n, std::uint64_t seed) {
  struct NamedSet { std::string name; std::function<const ConvexSet&()> get; };
  static const ConeDescriptor c2 = ConeDescriptor::elliptic({1.0});
  static const ConeDescriptor c3 = ConeDescriptor::elliptic({1.0, 2.0});
  static const BodySpec b2 = BodySpec::circular_cone(2, 1.5);
  static const BodySpec b3(BodyKind::circular_cone, 3, {0.7, 1.3});
  const std::vector<const ConvexSet*> sets = {&c2, &c3, &b2, &b3};
  const std::vector<std::string> names = {"cone {y>=|x|}", "cone slopes (1,2)",
                                          "circular cone 2D", "circular cone 3D"};
  std::vector<std::vector<Vec>> normals;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    normals.push_back(sample_section_normals(*sets[s], 32, seed + s));
  }
  struct Task { int set; Vec u; double t; double lambda; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int s = static_cast<int>(i % static_cast<long>(sets.size()));
    const Vec& u = pick(normals[s], rng);
    tasks.push_back({s, u, rng.uniform(0.2, 5.0), (i / sets.size()) % 2 == 0 ? 2.0 : 5.0});
  }
  return evaluate<Task>("centroids.cone_scaling", tasks, [&](const Task& t) {
    const ConvexSet& set = *sets[t.set];
    const Vec c1 = section_stats(set, t.u, t.t).centroid;
    const Vec c2 = section_stats(set, t.u, t.lambda * t.t).centroid;
    const double d = (c2 - t.lambda * c1).norm();
    Outcome o{d <= 1e-8 * std::max(1.0, c2.norm()), d, {}};
    if (!o.ok) {
      o.what = names[t.set] + ": u=" + describe(t.u) + " t=" + std::to_string(t.t) +
               " lambda=" + std::to_string(t.lambda) + " mismatch " + std::to_string(d);
    }
    return o;
  });
}

PropertyResult prop_fit_line_equivariance(long n, std::uint64_t seed) {
  struct Task { std::vector<Vec> pts; Mat R; Vec b; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const int dim = i % 2 == 0 ? 2 : 3;
    const int m = 3 + static_cast<int>(rng.uniform() * 18);
    const Vec base = 5.0 * random_in_ball(rng, dim);
    const Vec dir = rng.unit_vector(dim);
    std::vector<Vec> pts;
    for (int k = 0; k < m; ++k) {
      pts.push_back(base + rng.uniform(-4.0, 4.0) * dir + 0.1 * random_in_ball(rng, dim));
    }
    Mat A(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) A(r, c) = rng.normal();
    Mat Q = Eigen::HouseholderQR<Mat>(A).householderQ();
    tasks.push_back({std::move(pts), Q, 10.0 * random_in_ball(rng, dim)});
  }
  return evaluate<Task>("centroids.fit_line_equivariance", tasks, [&](const Task& t) {
    std::vector<Vec> moved;
    double scale = 1.0;
    for (const Vec& p : t.pts) {
      moved.push_back(t.R * p + t.b);
      scale = std::max({scale, p.norm(), moved.back().norm()});
    }
    const LineFit f = fit_line(t.pts);
    const LineFit g = fit_line(moved);
    const Vec rd = t.R * f.dir;
    const double sign = rd.dot(g.dir) < 0 ? -1.0 : 1.0;
    const double e = std::max({(g.base - (t.R * f.base + t.b)).norm() / scale,
                               (g.dir - sign * rd).norm(),
                               std::abs(g.residual_rms - f.residual_rms) / scale,
                               std::abs(g.residual_norm - f.residual_norm)});
    Outcome o{e <= 1e-12, e, {}};
    if (!o.ok) o.what = "fit changed by " + std::to_string(e) + " under a rigid motion";
    return o;
  });
}

PropertyResult prop_cut_monotonicity(long n, std::uint64_t seed) {
  // One sample is one volume; each task scans 10 offsets along one direction.
  const std::vector<NamedBody> bodies = {
      {"disk", BodySpec::ball(2, 1.0, make_vec({0.5, 2.0}))},
      {"ellipse", BodySpec::ellipsoid({2.0, 0.7}, make_vec({0.3, -0.2}))},
      {"parabola", BodySpec::paraboloid(2, {1.0}, make_vec({0.2, 1.0}))},
      {"hyperbola", BodySpec::hyperboloid_sheet(2, {1.0})},
      {"quartic", BodySpec::function_epigraph(2, GraphFunction::quartic)},
      {"exp", BodySpec::function_epigraph(2, GraphFunction::exp)},
      {"superellipse", BodySpec::superellipsoid(2, 4.0, {}, make_vec({1.0, 1.0}))},
      {"ball", BodySpec::ball(3, 1.0, make_vec({0.0, 1.0, 2.0}))},
      {"paraboloid", BodySpec::paraboloid(3, {1.0, 2.0}, make_vec({0.5, 0.0, 1.0}))},
  };
  constexpr int kSteps = 10;
  struct Task { int body; Vec u; std::vector<double> s; };
  Rng rng(seed);
  std::vector<Task> tasks;
  const long n_tasks = std::max(1L, n / kSteps);
  for (long i = 0; static_cast<long>(tasks.size()) < n_tasks; ++i) {
    // Space bodies are sampled 1 time in 10 to keep the suite fast.
    const int b = i % 10 == 9 ? 7 + static_cast<int>((i / 10) % 2)
                              : static_cast<int>(i % 7);
    const BodySpec& body = bodies[b].body;
    const Vec u = sample_section_normals(body, 1, seed * 7919 + i)[0];
    const Interval I = admissible_levels(body, u);
    const double lo = std::max(I.lo.value(), 0.0);
    const double hi = I.hi.is_finite() ? I.hi.value() : I.lo.value() + 3.0 * body.length_scale();
    if (!(hi > lo)) continue;
    const double pad = 0.2 * (hi - lo);
    std::vector<double> s;
    for (int k = 0; k < kSteps; ++k) {
      double v = rng.uniform(lo - pad, hi + pad);
      s.push_back(std::max(v, 1e-3 * (hi - lo)));
    }
    std::sort(s.begin(), s.end());
    tasks.push_back({b, u, std::move(s)});
  }
  PropertyResult r = evaluate<Task>("cutvol.monotonicity", tasks, [&](const Task& t) {
    const BodySpec& body = bodies[t.body].body;
    double prev = 0.0, prev_err = 0.0, worst = 0.0;
    for (double s : t.s) {
      const CutVolume cv = cut_volume(body, CutParam{t.u / s});
      if (!cv.value.is_finite()) {
        return Outcome{false, 0.0, bodies[t.body].name + ": infinite volume on a bounded slab"};
      }
      const double drop = prev - cv.value.value();
      worst = std::max(worst, drop);
      if (drop > prev_err + cv.err) {
        return Outcome{false, drop, bodies[t.body].name + ": V decreased by " +
                                        std::to_string(drop) + " at s=" + std::to_string(s) +
                                        " u=" + describe(t.u)};
      }
      prev = cv.value.value();
      prev_err = cv.err;
    }
    return Outcome{true, std::max(0.0, worst), {}};
  });
  r.samples *= kSteps;
  return r;
}

namespace {

// Area of disk(center, R) ∩ {<a, x> <= 1} on a polar grid about the center.
double polar_grid_area(const Vec& center, double R, const Vec& a, int nodes) {
  const double slack = 1.0 - a.dot(center);
  const double h = 2.0 * std::numbers::pi / nodes;
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double th = (k + 0.5) * h;
    const double an = a(0) * std::cos(th) + a(1) * std::sin(th);
    if (slack >= 0.0) {
      const double r = an > 0.0 ? std::min(R, slack / an) : R;
      sum += 0.5 * r * r;
    } else if (an < 0.0) {
      const double d = slack / an;
      if (d < R) sum += 0.5 * (R * R - d * d);
    }
  }
  return sum * h;
}

}  // namespace

PropertyResult prop_fubini_consistency(long n, std::uint64_t seed) {
  struct Task { Vec center; double R; Vec a; };
  Rng rng(seed);
  std::vector<Task> tasks;
  for (long i = 0; i < n; ++i) {
    const double R = rng.uniform(0.5, 2.0);
    const Vec c = 3.0 * random_in_ball(rng, 2);
    const Vec u = rng.unit_vector(2);
    // Cut offsets across the whole disk: <u, x> ranges over <u,c> +- R.
    double s = u.dot(c) + rng.uniform(-0.95, 0.95) * R;
    if (std::abs(s) < 1e-3) s = 1e-3;
    tasks.push_back({c, R, u / s});
  }
  return evaluate<Task>("cutvol.fubini_consistency", tasks, [&](const Task& t) {
    const BodySpec disk = BodySpec::ball(2, t.R, t.center);
    const CutVolume cv = cut_volume(disk, CutParam{t.a});
    const double grid = polar_grid_area(t.center, t.R, t.a, 200000);
    if (!cv.value.is_finite()) return Outcome{false, 0.0, "infinite volume for a disk"};
    const double rel = std::abs(cv.value.value() - grid) / std::max(grid, 1e-300);
    Outcome o{rel <= 1e-5, rel, {}};
    if (!o.ok) {
      o.what = "center " + describe(t.center) + " R=" + std::to_string(t.R) + " a=" +
               describe(t.a) + ": slicing " + std::to_string(cv.value.value()) + " vs grid " +
               std::to_string(grid);
    }
    return o;
  });
}

std::vector<PropertyResult> run_all_properties(long n, std::uint64_t seed) {
  return {
      prop_convexity(n, seed),
      prop_support_duality(n, seed + 1),
      prop_gauss_round_trip(n, seed + 2),
      prop_boundary_hit(n, seed + 3),
      prop_recession_limit(n, seed + 4),
      prop_section_invariants(n, seed + 5),
      prop_affine_equivariance(n, seed + 6),
      prop_cone_scaling(n, seed + 7),
      prop_fit_line_equivariance(n, seed + 8),
      prop_cut_monotonicity(n, seed + 9),
      prop_fubini_consistency(n, seed + 10),
  };
}

}  // namespace convsec::testing
