#include "convsec/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "convsec/error.hpp"

namespace convsec {

namespace {

constexpr double kDivergence = 1e12;

int horizontal_count(int dim) { return dim - 1; }

}  // namespace

std::string_view to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::ellipsoid: return "ellipsoid";
    case BodyKind::paraboloid: return "elliptic-paraboloid-epigraph";
    case BodyKind::hyperboloid_sheet: return "hyperboloid-upper-sheet";
    case BodyKind::circular_cone: return "circular-cone";
    case BodyKind::function_epigraph: return "function-epigraph";
    case BodyKind::superellipsoid: return "superellipsoid";
  }
  return "unknown";
}

std::string_view to_string(GraphFunction f) {
  switch (f) {
    case GraphFunction::square: return "square";
    case GraphFunction::quartic: return "quartic";
    case GraphFunction::exp: return "exp";
    case GraphFunction::cosh: return "cosh";
  }
  return "unknown";
}

std::optional<BodyKind> parse_body_kind(std::string_view s) {
  for (BodyKind k : {BodyKind::ellipsoid, BodyKind::paraboloid, BodyKind::hyperboloid_sheet,
                     BodyKind::circular_cone, BodyKind::function_epigraph,
                     BodyKind::superellipsoid}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<GraphFunction> parse_graph_function(std::string_view s) {
  for (GraphFunction f : {GraphFunction::square, GraphFunction::quartic, GraphFunction::exp,
                          GraphFunction::cosh}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

double graph_value(GraphFunction f, double x) {
  switch (f) {
    case GraphFunction::square: return x * x;
    case GraphFunction::quartic: return (x * x) * (x * x);
    case GraphFunction::exp: return std::exp(x);
    case GraphFunction::cosh: return std::cosh(x);
  }
  return 0.0;
}

double graph_slope(GraphFunction f, double x) {
  switch (f) {
    case GraphFunction::square: return 2.0 * x;
    case GraphFunction::quartic: return 4.0 * x * x * x;
    case GraphFunction::exp: return std::exp(x);
    case GraphFunction::cosh: return std::sinh(x);
  }
  return 0.0;
}

ExtReal graph_conjugate(GraphFunction f, double w) {
  // phi(x) = w x - g(x) is concave; its derivative w - g'(x) is nonincreasing.
  auto phi = [&](double x) { return w * x - graph_value(f, x); };
  auto dphi = [&](double x) { return w - graph_slope(f, x); };

  double best = phi(0.0);
  const double d0 = dphi(0.0);
  if (d0 == 0.0) return best;
  const double dir = d0 > 0.0 ? 1.0 : -1.0;

  double lo = 0.0;
  double step = 1.0;
  double hi = dir * step;
  while (dir * dphi(hi) > 0.0) {
    best = std::max(best, phi(hi));
    if (best > kDivergence) return ExtReal::pos_inf();
    if (step > 1e15) return best;  // supremum approached at infinity, not attained
    lo = hi;
    step *= 2.0;
    hi = dir * step;
  }
  // Root of dphi between lo and hi.
  double a = std::min(lo, hi), b = std::max(lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    if (dphi(m) > 0.0) a = m; else b = m;
  }
  best = std::max(best, phi(0.5 * (a + b)));
  if (best > kDivergence) return ExtReal::pos_inf();
  return best;
}

BodySpec::BodySpec(BodyKind kind, int dim, std::vector<double> params, Vec translation,
                   std::optional<GraphFunction> function)
    : kind_(kind), dim_(dim), params_(std::move(params)),
      translation_(std::move(translation)), function_(function) {
  auto bad = [](const std::string& m) { fail(ErrorCode::InvalidArgument, m); };
  if (dim_ != 2 && dim_ != 3) bad("ambient dimension must be 2 or 3");
  if (translation_.size() == 0) translation_ = Vec::Zero(dim_);
  if (translation_.size() != dim_) bad("translation has wrong dimension");
  if (!translation_.allFinite()) bad("translation must be finite");
  for (double p : params_) {
    if (!std::isfinite(p) || !(p > 0.0)) bad("shape parameters must be positive and finite");
  }
  const auto np = params_.size();
  const auto h = static_cast<std::size_t>(horizontal_count(dim_));
  const auto d = static_cast<std::size_t>(dim_);
  if (kind_ != BodyKind::function_epigraph && function_) {
    bad("graph function tag only applies to function-epigraph");
  }
  switch (kind_) {
    case BodyKind::ellipsoid:
      if (np != 1 && np != d) bad("ellipsoid needs 1 or dim semi-axes");
      break;
    case BodyKind::paraboloid:
    case BodyKind::hyperboloid_sheet:
    case BodyKind::circular_cone:
      if (np != 1 && np != h) bad(std::string(to_string(kind_)) + " needs 1 or dim-1 parameters");
      break;
    case BodyKind::function_epigraph:
      if (np != 0) bad("function-epigraph takes no numeric parameters");
      if (!function_) bad("function-epigraph needs a graph function tag");
      break;
    case BodyKind::superellipsoid:
      if (np != 1 && np != d + 1) bad("superellipsoid needs p or p followed by dim semi-axes");
      if (params_[0] < 2.0) bad("superellipsoid exponent must be >= 2");
      break;
  }
}

BodySpec BodySpec::ellipsoid(std::vector<double> semi_axes, Vec translation) {
  const int dim = static_cast<int>(semi_axes.size());
  return BodySpec(BodyKind::ellipsoid, dim, std::move(semi_axes), std::move(translation));
}

BodySpec BodySpec::ball(int dim, double radius, Vec translation) {
  return BodySpec(BodyKind::ellipsoid, dim, {radius}, std::move(translation));
}

BodySpec BodySpec::paraboloid(int dim, std::vector<double> coeffs, Vec translation) {
  return BodySpec(BodyKind::paraboloid, dim, std::move(coeffs), std::move(translation));
}

BodySpec BodySpec::hyperboloid_sheet(int dim, std::vector<double> semi_axes, Vec translation) {
  return BodySpec(BodyKind::hyperboloid_sheet, dim, std::move(semi_axes), std::move(translation));
}

BodySpec BodySpec::circular_cone(int dim, double slope, Vec translation) {
  return BodySpec(BodyKind::circular_cone, dim, {slope}, std::move(translation));
}

BodySpec BodySpec::function_epigraph(int dim, GraphFunction f, Vec translation) {
  return BodySpec(BodyKind::function_epigraph, dim, {}, std::move(translation), f);
}

BodySpec BodySpec::superellipsoid(int dim, double p, std::vector<double> semi_axes,
                                  Vec translation) {
  std::vector<double> params{p};
  params.insert(params.end(), semi_axes.begin(), semi_axes.end());
  return BodySpec(BodyKind::superellipsoid, dim, std::move(params), std::move(translation));
}

BodySpec BodySpec::translated(const Vec& shift) const {
  BodySpec out = *this;
  out.translation_ = translation_ + shift;
  return out;
}

bool operator==(const BodySpec& a, const BodySpec& b) {
  return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.params_ == b.params_ &&
         a.translation_ == b.translation_ && a.function_ == b.function_;
}

double BodySpec::axis_param(int i) const {
  if (kind_ == BodyKind::superellipsoid) {
    return params_.size() == 1 ? 1.0 : params_[static_cast<std::size_t>(i) + 1];
  }
  return params_.size() == 1 ? params_[0] : params_[static_cast<std::size_t>(i)];
}

bool BodySpec::bounded() const {
  return kind_ == BodyKind::ellipsoid || kind_ == BodyKind::superellipsoid;
}

bool BodySpec::graph_like() const {
  return kind_ == BodyKind::paraboloid || kind_ == BodyKind::hyperboloid_sheet ||
         kind_ == BodyKind::function_epigraph;
}

double BodySpec::graph_height(const Vec& xh) const {
  double s = 0.0;
  for (int i = 0; i < xh.size(); ++i) {
    switch (kind_) {
      case BodyKind::paraboloid: s += axis_param(i) * xh(i) * xh(i); break;
      case BodyKind::hyperboloid_sheet: s += (xh(i) / axis_param(i)) * (xh(i) / axis_param(i)); break;
      case BodyKind::function_epigraph: s += graph_value(*function_, xh(i)); break;
      default: fail(ErrorCode::NotGraphLike, std::string(to_string(kind_)) + " is not an epigraph");
    }
  }
  return kind_ == BodyKind::hyperboloid_sheet ? std::sqrt(1.0 + s) : s;
}

Vec BodySpec::graph_point(const Vec& x) const {
  if (!graph_like()) fail(ErrorCode::NotGraphLike, std::string(to_string(kind_)) + " is not an epigraph");
  const int h = horizontal_count(dim_);
  if (x.size() != h) fail(ErrorCode::InvalidArgument, "graph_point needs dim-1 coordinates");
  Vec p(dim_);
  p.head(h) = x;
  p(h) = graph_height(x - translation_.head(h)) + translation_(h);
  return p;
}

double BodySpec::local_level(const Vec& y) const {
  const int last = dim_ - 1;
  double s = 0.0;
  switch (kind_) {
    case BodyKind::ellipsoid:
      for (int i = 0; i < dim_; ++i) s += (y(i) / axis_param(i)) * (y(i) / axis_param(i));
      return s - 1.0;
    case BodyKind::superellipsoid: {
      const double p = params_[0];
      for (int i = 0; i < dim_; ++i) s += std::pow(std::abs(y(i) / axis_param(i)), p);
      return s - 1.0;
    }
    case BodyKind::paraboloid:
    case BodyKind::hyperboloid_sheet:
    case BodyKind::function_epigraph:
      return graph_height(y.head(last)) - y(last);
    case BodyKind::circular_cone:
      for (int i = 0; i < last; ++i) s += (axis_param(i) * y(i)) * (axis_param(i) * y(i));
      return std::sqrt(s) - y(last);
  }
  return 0.0;
}

double BodySpec::level(const Vec& x) const { return local_level(x - translation_); }

Vec BodySpec::local_gradient(const Vec& y) const {
  const int last = dim_ - 1;
  Vec g = Vec::Zero(dim_);
  switch (kind_) {
    case BodyKind::ellipsoid:
      for (int i = 0; i < dim_; ++i) g(i) = 2.0 * y(i) / (axis_param(i) * axis_param(i));
      return g;
    case BodyKind::superellipsoid: {
      const double p = params_[0];
      for (int i = 0; i < dim_; ++i) {
        const double z = y(i) / axis_param(i);
        g(i) = p * std::pow(std::abs(z), p - 1.0) * (z < 0 ? -1.0 : 1.0) / axis_param(i);
      }
      return g;
    }
    case BodyKind::paraboloid:
      for (int i = 0; i < last; ++i) g(i) = 2.0 * axis_param(i) * y(i);
      break;
    case BodyKind::hyperboloid_sheet: {
      const double r = graph_height(y.head(last));
      for (int i = 0; i < last; ++i) g(i) = y(i) / (axis_param(i) * axis_param(i) * r);
      break;
    }
    case BodyKind::function_epigraph:
      for (int i = 0; i < last; ++i) g(i) = graph_slope(*function_, y(i));
      break;
    case BodyKind::circular_cone: {
      double q = 0.0;
      for (int i = 0; i < last; ++i) q += (axis_param(i) * y(i)) * (axis_param(i) * y(i));
      const double r = std::sqrt(q);
      if (r == 0.0) fail(ErrorCode::NotOnBoundary, "cone apex has no unique normal");
      for (int i = 0; i < last; ++i) g(i) = axis_param(i) * axis_param(i) * y(i) / r;
      break;
    }
  }
  g(last) = -1.0;
  return g;
}

Vec BodySpec::outer_normal(const Vec& x) const {
  if (x.size() != dim_) fail(ErrorCode::InvalidArgument, "point has wrong dimension");
  const Vec y = x - translation_;
  const double tol = 1e-8 * std::max(1.0, y.norm());
  const double f = local_level(y);
  if (!(std::abs(f) <= tol)) {
    std::ostringstream os;
    os << "defining function is " << f << " at the given point";
    fail(ErrorCode::NotOnBoundary, os.str());
  }
  return local_gradient(y).normalized();
}

ExtReal BodySpec::local_support(const Vec& u) const {
  const int last = dim_ - 1;
  switch (kind_) {
    case BodyKind::ellipsoid: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += (axis_param(i) * u(i)) * (axis_param(i) * u(i));
      return std::sqrt(s);
    }
    case BodyKind::superellipsoid: {
      const double p = params_[0];
      const double q = p / (p - 1.0);
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += std::pow(std::abs(axis_param(i) * u(i)), q);
      return std::pow(s, 1.0 / q);
    }
    default: break;
  }

  if (recession_cone().support(u).is_pos_inf()) return ExtReal::pos_inf();
  // Remaining cases have a ray-or-wider recession cone around +e_last; a
  // horizontal u still sees an unbounded set.
  const double s = -u(last);
  if (!(s > 0.0)) return ExtReal::pos_inf();

  switch (kind_) {
    case BodyKind::paraboloid: {
      double v = 0.0;
      for (int i = 0; i < last; ++i) v += u(i) * u(i) / (4.0 * s * axis_param(i));
      return v;
    }
    case BodyKind::hyperboloid_sheet: {
      double b2 = 0.0;
      for (int i = 0; i < last; ++i) b2 += (axis_param(i) * u(i)) * (axis_param(i) * u(i));
      if (b2 > s * s) return ExtReal::pos_inf();
      return -std::sqrt(s * s - b2);
    }
    case BodyKind::circular_cone:
      return 0.0;
    case BodyKind::function_epigraph: {
      double v = 0.0;
      for (int i = 0; i < last; ++i) {
        const ExtReal c = graph_conjugate(*function_, u(i) / s);
        if (!c.is_finite()) return ExtReal::pos_inf();
        v += s * c.value();
      }
      return v;
    }
    default: break;
  }
  return ExtReal::pos_inf();
}

ExtReal BodySpec::support(const Vec& u) const {
  if (u.size() != dim_) fail(ErrorCode::InvalidArgument, "direction has wrong dimension");
  return local_support(u) + u.dot(translation_);
}

std::optional<Vec> BodySpec::local_inverse_gauss(const Vec& u) const {
  const int last = dim_ - 1;
  Vec x = Vec::Zero(dim_);
  switch (kind_) {
    case BodyKind::ellipsoid: {
      const double h = local_support(u).value();
      for (int i = 0; i < dim_; ++i) x(i) = axis_param(i) * axis_param(i) * u(i) / h;
      return x;
    }
    case BodyKind::superellipsoid: {
      const double p = params_[0];
      const double q = p / (p - 1.0);
      const double h = local_support(u).value();
      for (int i = 0; i < dim_; ++i) {
        const double b = axis_param(i) * u(i);
        const double z = std::pow(std::abs(b) / h, q - 1.0);
        x(i) = axis_param(i) * (b < 0 ? -z : z);
      }
      return x;
    }
    case BodyKind::circular_cone:
      return std::nullopt;
    default: break;
  }

  const double s = -u(last);
  if (!(s > 0.0)) return std::nullopt;
  switch (kind_) {
    case BodyKind::paraboloid:
      for (int i = 0; i < last; ++i) x(i) = u(i) / (2.0 * s * axis_param(i));
      break;
    case BodyKind::hyperboloid_sheet: {
      double b2 = 0.0;
      for (int i = 0; i < last; ++i) b2 += (axis_param(i) * u(i)) * (axis_param(i) * u(i));
      if (!(b2 < s * s)) return std::nullopt;
      const double den = std::sqrt(s * s - b2);
      for (int i = 0; i < last; ++i) x(i) = axis_param(i) * axis_param(i) * u(i) / den;
      break;
    }
    case BodyKind::function_epigraph:
      for (int i = 0; i < last; ++i) {
        const double w = u(i) / s;
        switch (*function_) {
          case GraphFunction::square: x(i) = 0.5 * w; break;
          case GraphFunction::quartic: x(i) = std::cbrt(0.25 * w); break;
          case GraphFunction::cosh: x(i) = std::asinh(w); break;
          case GraphFunction::exp:
            if (!(w > 0.0)) return std::nullopt;
            x(i) = std::log(w);
            break;
        }
      }
      break;
    default: return std::nullopt;
  }
  x(last) = graph_height(x.head(last));
  return x;
}

bool BodySpec::admits_normal(const Vec& u) const {
  return u.size() == dim_ && local_inverse_gauss(u).has_value();
}

Vec BodySpec::inverse_gauss(const Vec& u) const {
  if (u.size() != dim_ || !is_unit(u)) fail(ErrorCode::InvalidArgument, "normal must be a unit vector");
  auto x = local_inverse_gauss(u);
  if (!x) fail(ErrorCode::InadmissibleNormal, "no boundary point has this outer normal");
  return *x + translation_;
}

ConeDescriptor BodySpec::recession_cone() const {
  const int h = horizontal_count(dim_);
  switch (kind_) {
    case BodyKind::ellipsoid:
    case BodyKind::superellipsoid:
      return ConeDescriptor::trivial(dim_);
    case BodyKind::paraboloid:
      return ConeDescriptor::ray(dim_);
    case BodyKind::hyperboloid_sheet: {
      std::vector<double> slopes;
      for (int i = 0; i < h; ++i) slopes.push_back(1.0 / axis_param(i));
      return ConeDescriptor::elliptic(std::move(slopes));
    }
    case BodyKind::circular_cone: {
      std::vector<double> slopes;
      for (int i = 0; i < h; ++i) slopes.push_back(axis_param(i));
      return ConeDescriptor::elliptic(std::move(slopes));
    }
    case BodyKind::function_epigraph:
      return *function_ == GraphFunction::exp ? ConeDescriptor::orthant(dim_)
                                              : ConeDescriptor::ray(dim_);
  }
  return ConeDescriptor::trivial(dim_);
}

double BodySpec::length_scale() const {
  switch (kind_) {
    case BodyKind::ellipsoid:
    case BodyKind::superellipsoid:
    case BodyKind::hyperboloid_sheet: {
      double m = 0.0;
      for (int i = 0; i < (kind_ == BodyKind::hyperboloid_sheet ? dim_ - 1 : dim_); ++i) {
        m = std::max(m, axis_param(i));
      }
      return m;
    }
    default: return 1.0;
  }
}

Vec BodySpec::interior_point() const {
  const int last = dim_ - 1;
  Vec y = Vec::Zero(dim_);
  switch (kind_) {
    case BodyKind::ellipsoid:
    case BodyKind::superellipsoid: break;
    case BodyKind::paraboloid:
    case BodyKind::circular_cone: y(last) = 1.0; break;
    case BodyKind::hyperboloid_sheet: y(last) = 2.0; break;
    case BodyKind::function_epigraph: y(last) = graph_height(Vec::Zero(last)) + 1.0; break;
  }
  return y + translation_;
}

}  // namespace convsec
