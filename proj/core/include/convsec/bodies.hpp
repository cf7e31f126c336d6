#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convsec/cone.hpp"
#include "convsec/convex_set.hpp"

namespace convsec {

enum class BodyKind {
  ellipsoid,
  paraboloid,         // x_last >= sum_i q_i x_i^2
  hyperboloid_sheet,  // x_last >= sqrt(1 + sum_i (x_i / a_i)^2)
  circular_cone,      // x_last >= sqrt(sum_i (c_i x_i)^2)
  function_epigraph,  // x_last >= sum_i g(x_i)
  superellipsoid,     // sum_i |x_i / a_i|^p <= 1
};

enum class GraphFunction { square, quartic, exp, cosh };

std::string_view to_string(BodyKind kind);
std::string_view to_string(GraphFunction f);
std::optional<BodyKind> parse_body_kind(std::string_view s);
std::optional<GraphFunction> parse_graph_function(std::string_view s);

/// Parametric convex body from a fixed catalog, with exact oracles.
///
/// Parameters (before translation):
///   ellipsoid          semi-axes a_1..a_d, or one radius
///   paraboloid         coefficients q_1..q_{d-1}, or one shared value
///   hyperboloid_sheet  semi-axes a_1..a_{d-1}, or one shared value
///   circular_cone      slopes c_1..c_{d-1}, or one shared slope
///   function_epigraph  none; the graph function is a separate tag
///   superellipsoid     p, then optionally semi-axes a_1..a_d (default 1)
///
/// Immutable after construction.
class BodySpec final : public ConvexSet {
 public:
  /// Validating constructor; throws Error(InvalidArgument).
  BodySpec(BodyKind kind, int dim, std::vector<double> params,
           Vec translation = {},
           std::optional<GraphFunction> function = std::nullopt);

  static BodySpec ellipsoid(std::vector<double> semi_axes, Vec translation = {});
  static BodySpec ball(int dim, double radius, Vec translation = {});
  static BodySpec paraboloid(int dim, std::vector<double> coeffs = {1.0},
                             Vec translation = {});
  static BodySpec hyperboloid_sheet(int dim, std::vector<double> semi_axes = {1.0},
                                    Vec translation = {});
  static BodySpec circular_cone(int dim, double slope = 1.0, Vec translation = {});
  static BodySpec function_epigraph(int dim, GraphFunction f, Vec translation = {});
  static BodySpec superellipsoid(int dim, double p,
                                 std::vector<double> semi_axes = {},
                                 Vec translation = {});

  BodyKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  const Vec& translation() const { return translation_; }
  std::optional<GraphFunction> function() const { return function_; }

  /// Same shape, translation replaced by translation() + shift.
  BodySpec translated(const Vec& shift) const;

  int dim() const override { return dim_; }
  double level(const Vec& x) const override;
  ExtReal support(const Vec& u) const override;
  ConeDescriptor recession_cone() const override;
  double length_scale() const override;
  Vec interior_point() const override;

  bool bounded() const;

  /// Normalized gradient of the defining function at a boundary point.
  /// Throws NotOnBoundary.
  Vec outer_normal(const Vec& x) const;

  /// Whether `u` is the outer normal of some boundary point.
  bool admits_normal(const Vec& u) const;

  /// The boundary point whose outer normal is u. Throws InadmissibleNormal.
  Vec inverse_gauss(const Vec& u) const;

  /// Epigraph-type kinds: boundary is the graph of a function of the first
  /// dim-1 coordinates.
  bool graph_like() const;

  /// Boundary point above horizontal position `x` (dim-1 entries, world
  /// coordinates). Throws NotGraphLike.
  Vec graph_point(const Vec& x) const;

  friend bool operator==(const BodySpec& a, const BodySpec& b);

 private:
  double local_level(const Vec& y) const;
  Vec local_gradient(const Vec& y) const;
  ExtReal local_support(const Vec& u) const;
  std::optional<Vec> local_inverse_gauss(const Vec& u) const;
  double graph_height(const Vec& xh) const;

  double axis_param(int i) const;  // broadcast single-value params

  BodyKind kind_;
  int dim_;
  std::vector<double> params_;
  Vec translation_;
  std::optional<GraphFunction> function_;
};

/// Scalar graph function and its first derivative.
double graph_value(GraphFunction f, double x);
double graph_slope(GraphFunction f, double x);

/// sup_x (w x - g(x)) by one-dimensional concave ascent. Returns +inf when
/// the running maximum exceeds 1e12.
ExtReal graph_conjugate(GraphFunction f, double w);

// Free-function forms of the body oracles.

inline bool contains(const ConvexSet& set, const Vec& x) { return set.contains(x); }
inline ExtReal support(const ConvexSet& set, const Vec& u) { return set.support(u); }
inline ConeDescriptor recession_cone(const ConvexSet& set) { return set.recession_cone(); }

/// Minkowski functional inf{lambda > 0 : x in lambda K}. Requires the origin
/// in the interior (OriginNotInterior otherwise).
ExtReal gauge(const ConvexSet& set, const Vec& x);

/// Distance t* >= 0 from an interior origin to the boundary along `dir`;
/// +inf when `dir` is a recession direction. Throws NotInterior.
ExtReal boundary_hit(const ConvexSet& set, const Vec& origin, const Vec& dir);

/// Same as boundary_hit without the interiority margin check; for callers
/// that already validated `origin`. Pass check_recession = false when `dir`
/// is known not to be a recession direction (e.g. inside a bounded section).
ExtReal boundary_hit_unchecked(const ConvexSet& set, const Vec& origin,
                               const Vec& dir, bool check_recession = true);

/// Interiority test used by boundary_hit: origin and its axis neighbours at
/// distance 1e-6 * length_scale all lie in the set.
bool interior_with_margin(const ConvexSet& set, const Vec& origin);

}  // namespace convsec
