#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "convsec/bodies.hpp"
#include "convsec/sections.hpp"

namespace convsec {

/// Least-squares line through a point cloud.
struct LineFit {
  Vec base;                  // mean of the points
  Vec dir;                   // unit; largest-magnitude component positive
  double residual_rms = 0;   // RMS perpendicular distance
  double residual_norm = 0;  // residual_rms / spread, clamped to [0, 1]
  double spread = 0;         // RMS extent of the points along dir
  int n_points = 0;
};

enum class LineFamilyTag { concurrent, parallel, neither };
std::string_view to_string(LineFamilyTag tag);

struct LineFamilyVerdict {
  LineFamilyTag tag = LineFamilyTag::neither;
  Vec witness;               // common point (concurrent) or direction (parallel)
  double score = 0;          // normalized least-squares residual of the verdict
  bool tie = false;          // both concurrent and parallel within tolerance
  double max_distance = 0;   // from the least-squares point, over scale
  double max_angle = 0;      // largest pairwise angle between directions
  double max_residual_norm = 0;
  double scale = 1;
};

/// A centroid line together with the sections it was fitted to.
struct CentroidLine {
  LineFit fit;
  std::vector<SectionStats> sections;
  double max_centroid_err = 0;
};

/// Levels used to probe a centroid curve: Chebyshev-spaced interior levels
/// when I(u) is bounded, t0 + delta * 1.7^k when it is a half-line (delta =
/// 0.1 * max(1, length scale)). n_levels = 0 selects 16 and 12 respectively.
std::vector<double> sample_levels(const ConvexSet& set, const Vec& u, int n_levels = 0);

std::vector<SectionStats> sample_sections(const ConvexSet& set, const Vec& u,
                                          std::span<const double> levels,
                                          double rel_tol = 1e-8);

/// Section centroids at the given levels, order preserved. Needs >= 3 levels.
std::vector<Vec> centroid_curve(const ConvexSet& set, const Vec& u,
                                std::span<const double> levels, double rel_tol = 1e-8);

/// Principal-direction fit. Throws DegeneratePointSet.
LineFit fit_line(std::span<const Vec> points);

CentroidLine centroid_line(const ConvexSet& set, const Vec& u, int n_levels = 0,
                           double rel_tol = 1e-8);

/// Collinearity violation of the section centroids in direction u; the
/// returned residual_norm is the statistic. Needs n_levels >= 8 (or 0 for
/// the default policy).
LineFit sccp_residual(const ConvexSet& set, const Vec& u, int n_levels = 0);

/// Decides whether a family of centroid lines is concurrent, parallel or
/// neither. A family containing a line with residual_norm > tol is not a
/// family of lines and is reported as neither.
LineFamilyVerdict classify_lines(std::span<const LineFit> lines, double tol = 1e-5);

/// Angle between the body's centroid line and the centroid line of its
/// recession cone for the same normal. Throws ConeSectionUnbounded when the
/// cone is not full-dimensional or its sections with this normal are
/// unbounded.
double cone_direction_check(const BodySpec& body, const Vec& u, int n_levels = 0);

/// Angle in [0, pi/2] between two lines with unit directions a and b.
double line_angle(const Vec& a, const Vec& b);

}  // namespace convsec
