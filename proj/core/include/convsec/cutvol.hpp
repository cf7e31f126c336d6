#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "convsec/bodies.hpp"
#include "convsec/ext_real.hpp"

namespace convsec {

/// Hyperplane H(a) = {<a, x> = 1} with half-spaces C(a)^- = {<a, x> <= 1}
/// and C(a)^+ = {<a, x> >= 1}.
struct CutParam {
  Vec a;
};

struct CutVolume {
  ExtReal value;           // volume of the body inside C(a)^-
  double err = 0.0;        // absolute error bound (0 for exact 0 and +inf)
  int n_sections = 0;      // section evaluations spent
};

/// V(a) by slicing along a/|a|: integral of section measures over
/// (-h(-a/|a|), 1/|a|). Returns +inf exactly when C(a)^- meets the interior
/// and <a, v> <= 0 for some nonzero recession direction v; returns 0 when
/// H(a) misses the interior on the far side. tol is the relative quadrature
/// tolerance.
CutVolume cut_volume(const ConvexSet& set, const CutParam& a, double tol = 1e-8);

/// Volume of the body inside {<n, y> <= c}; n need not be unit.
CutVolume halfspace_volume(const ConvexSet& set, const Vec& n, double c, double tol = 1e-8);

struct CutVolumeResult {
  Vec a;
  double V = 0.0;
  Vec grad;                    // central differences, Richardson-extrapolated
  double lambda = 0.0;         // <a, grad>
  Vec x_a;                     // centroid of H(a) cap body
  double section_measure = 0.0;
  double section_diameter = 0.0;
  double identity_residual = 0.0;   // |x(a) - grad / lambda|
  double moment_residual = 0.0;     // |grad + measure * x(a) / |a|| / |grad|
  double measure_residual = 0.0;    // ||lambda| |a| - measure| / measure
  double err_estimate = 0.0;        // bound on |V - true V|
  double step = 0.0;                // finite-difference step
};

/// Gradient of V at a with the centroid identity checks. The body must not
/// contain the origin. Throws OriginInsideBody, DegenerateCut.
CutVolumeResult cut_gradient(const ConvexSet& set, const CutParam& a, double tol = 1e-8);

struct ScanRow {
  Vec anchor;
  double value = 0.0;
  double err = 0.0;
};

struct ScanSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double rel_spread = 0.0;     // (max - min) / mean
};

ScanSummary summarize(std::span<const ScanRow> rows);

/// Volume between the surface and its tangent hyperplane at each anchor
/// lifted by k along the last axis. Anchors are boundary points. Throws
/// NotGraphLike, NotOnBoundary.
std::vector<ScanRow> parallel_cut_scan(const BodySpec& body, double k,
                                       std::span<const Vec> anchors, double tol = 1e-8);

/// Volume between the surface and the tangent hyperplane at each anchor
/// scaled by k about the apex (the origin of the untranslated body). Only
/// hyperboloid sheets and the cosh epigraph carry an apex; other kinds throw
/// NotApexCentered.
std::vector<ScanRow> homothety_cut_scan(const BodySpec& body, double k,
                                        std::span<const Vec> anchors, double tol = 1e-8);

enum class FloatingMode { translate, scale };
std::string_view to_string(FloatingMode mode);

struct FloatingResult {
  std::vector<ScanRow> rows;   // anchor = outer normal u
  std::vector<Vec> contacts;   // support points of the lifted/scaled copy
  ScanSummary summary;
};

/// Cut volumes of the body beyond the support hyperplanes of
/// B = body + lambda e_last (translate) or B = lambda body about the apex
/// (scale), over n_normals normals spread across the Gauss image of a graph
/// body. Throws NotGraphLike, InvalidArgument.
FloatingResult floating_constancy(const BodySpec& body, FloatingMode mode, double lambda,
                                  int n_normals, double tol = 1e-8);

/// Outer normals (u_last < 0) of a graph body, spread over a disk of slopes
/// of radius 0.8 / max semi-axis for hyperboloid sheets and 1.5 otherwise.
std::vector<Vec> graph_normals(const BodySpec& body, int n);

/// n random cut parameters a = u / t whose volume is positive and finite,
/// with u from sample_section_normals and t inside the admissible interval
/// away from its ends and from 0.
std::vector<CutParam> sample_cut_params(const ConvexSet& set, int n, std::uint64_t seed);

}  // namespace convsec
