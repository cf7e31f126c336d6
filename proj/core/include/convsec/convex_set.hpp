#pragma once

#include "convsec/ext_real.hpp"
#include "convsec/types.hpp"

namespace convsec {

class ConeDescriptor;

/// Closed convex set with nonempty interior in R^2 or R^3, described by a
/// convex defining function that is <= 0 exactly on the set.
///
/// Everything downstream (sections, cut volumes, shell distances) only talks
/// to this interface, so bodies and recession cones share one code path.
class ConvexSet {
 public:
  virtual ~ConvexSet() = default;

  virtual int dim() const = 0;

  /// Convex defining function; the set is {x : level(x) <= 0}.
  virtual double level(const Vec& x) const = 0;

  bool contains(const Vec& x) const { return level(x) <= 0.0; }

  /// h(u) = sup over the set of <u, y>.
  virtual ExtReal support(const Vec& u) const = 0;

  virtual ConeDescriptor recession_cone() const = 0;

  /// Characteristic length used for bracketing steps and degeneracy buffers.
  virtual double length_scale() const = 0;

  /// A point well inside the set.
  virtual Vec interior_point() const = 0;
};

}  // namespace convsec
