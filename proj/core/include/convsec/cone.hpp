#pragma once

#include <string>
#include <vector>

#include "convsec/convex_set.hpp"

namespace convsec {

/// Closed convex cone with apex at the origin. All cones that arise as
/// recession cones of the catalog bodies are aligned with the last axis:
///
///   trivial   {0}
///   ray       {t e_last : t >= 0}
///   elliptic  {x_last >= sqrt(sum_i (c_i x_i)^2)}
///   orthant   {x_i <= 0 for i < last, x_last >= 0}
class ConeDescriptor final : public ConvexSet {
 public:
  enum class Kind { trivial, ray, elliptic, orthant };

  static ConeDescriptor trivial(int dim);
  static ConeDescriptor ray(int dim);
  /// slopes.size() must be dim - 1; every slope > 0.
  static ConeDescriptor elliptic(std::vector<double> slopes);
  static ConeDescriptor orthant(int dim);

  Kind kind() const { return kind_; }
  const std::vector<double>& slopes() const { return slopes_; }

  /// Linear dimension of the cone.
  int cone_dim() const;
  std::string describe() const;

  int dim() const override { return dim_; }
  double level(const Vec& x) const override;
  /// 0 on the polar cone, +inf elsewhere.
  ExtReal support(const Vec& u) const override;
  ConeDescriptor recession_cone() const override { return *this; }
  double length_scale() const override { return 1.0; }
  Vec interior_point() const override;

  /// Membership with a relative tolerance suited to direction tests.
  bool contains_direction(const Vec& v) const;

  /// True iff <a, v> > 0 for every nonzero v in the cone.
  bool strictly_positive(const Vec& a) const;

  /// Positive iff strictly_positive(a); larger values mean <a, .> stays
  /// further away from zero on the cone (1 for the trivial cone).
  double positivity_margin(const Vec& a) const;

  /// True iff the cone meets the hyperplane u^perp only at the origin.
  bool meets_hyperplane_trivially(const Vec& u) const {
    return strictly_positive(u) || strictly_positive(-u);
  }

  /// Boundary of the cone intersected with the sphere of radius R. Exact
  /// (finitely many points) in the plane; sampled with `samples_per_arc`
  /// points per arc in space.
  std::vector<Vec> boundary_shell(double radius, int samples_per_arc) const;

  friend bool operator==(const ConeDescriptor& a, const ConeDescriptor& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.slopes_ == b.slopes_;
  }

 private:
  ConeDescriptor(Kind k, int dim, std::vector<double> slopes)
      : kind_(k), dim_(dim), slopes_(std::move(slopes)) {}

  Kind kind_;
  int dim_;
  std::vector<double> slopes_;
};

}  // namespace convsec
