#pragma once

#include <vector>

#include "convsec/convex_set.hpp"
#include "convsec/ext_real.hpp"

namespace convsec {

/// Pi(u, t) = {x : <u, x> = t}.
struct Hyperplane {
  Vec u;
  double t = 0.0;
};

/// Measure and centroid of one hyperplane section.
struct SectionStats {
  Vec u;
  double t = 0.0;
  double measure = 0.0;   // length (plane) or area (space)
  Vec centroid;
  double err_estimate = 0.0;  // absolute, same units as measure
  double centroid_err = 0.0;  // absolute, length units
  double diameter = 0.0;
  int n_evals = 0;            // boundary ray intersections performed
};

/// True iff every section with normal u is bounded, i.e. the recession cone
/// meets u^perp only at the origin. Independent of the level.
bool section_bounded(const ConvexSet& set, const Vec& u);

/// Open interval of levels t with 0 < measure(section(u, t)) < inf, namely
/// (-h(-u), h(u)). Throws UnboundedSection.
Interval admissible_levels(const ConvexSet& set, const Vec& u);

/// Orthonormal basis of u^perp (1 vector in the plane, 2 in space). Fixed,
/// deterministic choice.
std::vector<Vec> plane_basis(const Vec& u);

/// Point of Pi(u, t) minimizing the defining function; interior to the
/// section whenever the section has positive measure.
Vec section_anchor(const ConvexSet& set, const Vec& u, double t);

/// Section measure and centroid. In the plane the section is a chord found by
/// two boundary hits; in space the boundary of the section is traced in polar
/// form around an interior anchor and integrated by periodic trapezoid
/// doubling until the measure and centroid change by at most rel_tol.
///
/// Throws UnboundedSection, LevelOutOfRange (within 1e-9 * scale of an end of
/// the admissible interval) or DegenerateSection.
SectionStats section_stats(const ConvexSet& set, const Vec& u, double t,
                           double rel_tol = 1e-8);

}  // namespace convsec
