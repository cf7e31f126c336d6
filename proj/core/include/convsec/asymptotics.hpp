#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "convsec/bodies.hpp"
#include "convsec/cone.hpp"

namespace convsec {

/// Distances between the boundary of a body and the boundary of a cone on the
/// sphere of radius R.
struct ShellDistance {
  double R = 0.0;
  double d_asym = 0.0;        // symmetric Hausdorff distance on S_R
  double d_blowdown = 0.0;    // d_asym / R, the same comparison on S_1 after scaling
  double err = 0.0;           // sampling error bound for d_asym
  double body_to_cone = 0.0;  // one-sided: sup over body points
  double cone_to_body = 0.0;  // one-sided: sup over cone points
  int n_body_points = 0;
  int n_cone_points = 0;
};

/// Samples the boundary of the body and of the cone on S_R and compares them.
/// In the plane both sets are finite and found exactly by root finding along
/// the circle; in space each is a curve sampled on 720 azimuths, refined once
/// around the worst point. Requires R >= 10 (|translation| + 1). Throws
/// InvalidArgument, EmptyShellIntersection.
ShellDistance shell_distance(const BodySpec& body, const ConeDescriptor& cone, double R);

enum class AsymptoticVerdict { asymptotic, not_asymptotic, inconclusive };
std::string_view to_string(AsymptoticVerdict v);

struct AsymptoticReport {
  AsymptoticVerdict verdict = AsymptoticVerdict::inconclusive;
  std::vector<ShellDistance> rows;
};

/// Throws InvalidArgument unless radii are positive, increasing, at least 4,
/// and span two decades.
void validate_radii(std::span<const double> radii);

/// Verdict rule of asymptotic_diagnostic applied to precomputed rows.
AsymptoticVerdict classify_trend(std::span<const ShellDistance> rows);

/// d_asym(R) against the recession cone over increasing radii (at least 4,
/// spanning at least two decades). Verdict heuristics: asymptotic when the
/// distances strictly decrease and end below a tenth of the first value (or
/// all vanish); not_asymptotic when the last three are nondecreasing;
/// inconclusive otherwise.
AsymptoticReport asymptotic_diagnostic(const BodySpec& body, std::span<const double> radii);

/// Shell distance of (X - x0) against rec(X) with x0 the origin of the body's canonical frame.
ShellDistance blowdown_shell(const BodySpec& body, double R);

/// d_blowdown of blowdown_shell.
double blowdown_check(const BodySpec& body, double R);

}  // namespace convsec
