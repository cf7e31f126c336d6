#include "convsec/centroids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "convsec/error.hpp"

namespace convsec {

namespace {

constexpr double kGrowth = 1.7;

Vec canonical(Vec d) {
  Eigen::Index imax = 0;
  d.cwiseAbs().maxCoeff(&imax);
  return d(imax) < 0 ? Vec(-d) : d;
}

}  // namespace

std::string_view to_string(LineFamilyTag tag) {
  switch (tag) {
    case LineFamilyTag::concurrent: return "concurrent";
    case LineFamilyTag::parallel: return "parallel";
    case LineFamilyTag::neither: return "neither";
  }
  return "neither";
}

double line_angle(const Vec& a, const Vec& b) {
  const double s = a.dot(b) < 0 ? -1.0 : 1.0;
  const double chord = (a - s * b).norm();
  return 2.0 * std::asin(std::min(1.0, 0.5 * chord));
}

std::vector<double> sample_levels(const ConvexSet& set, const Vec& u, int n_levels) {
  if (n_levels != 0 && n_levels < 8) fail(ErrorCode::InvalidArgument, "need at least 8 levels");
  const Interval iv = admissible_levels(set, u);
  std::vector<double> levels;
  if (iv.bounded()) {
    const int n = n_levels ? n_levels : 16;
    const double mid = 0.5 * (iv.lo.value() + iv.hi.value());
    const double half = 0.5 * (iv.hi.value() - iv.lo.value());
    for (int k = n - 1; k >= 0; --k) {
      levels.push_back(mid + half * std::cos(std::numbers::pi * (2 * k + 1) / (2.0 * n)));
    }
    return levels;
  }
  const int n = n_levels ? n_levels : 12;
  const double delta = 0.1 * std::max(1.0, set.length_scale());
  if (iv.lo.is_finite()) {
    for (int k = 0; k < n; ++k) levels.push_back(iv.lo.value() + delta * std::pow(kGrowth, k));
  } else if (iv.hi.is_finite()) {
    for (int k = n - 1; k >= 0; --k) levels.push_back(iv.hi.value() - delta * std::pow(kGrowth, k));
  } else {
    fail(ErrorCode::InvalidArgument, "admissible interval is the whole line");
  }
  return levels;
}

std::vector<SectionStats> sample_sections(const ConvexSet& set, const Vec& u,
                                          std::span<const double> levels, double rel_tol) {
  std::vector<SectionStats> out;
  out.reserve(levels.size());
  for (double t : levels) out.push_back(section_stats(set, u, t, rel_tol));
  return out;
}

std::vector<Vec> centroid_curve(const ConvexSet& set, const Vec& u,
                                std::span<const double> levels, double rel_tol) {
  if (levels.size() < 3) fail(ErrorCode::InvalidArgument, "centroid curve needs >= 3 levels");
  std::vector<Vec> pts;
  for (const auto& s : sample_sections(set, u, levels, rel_tol)) pts.push_back(s.centroid);
  return pts;
}

LineFit fit_line(std::span<const Vec> points) {
  if (points.size() < 3) fail(ErrorCode::DegeneratePointSet, "need at least 3 points");
  const int dim = static_cast<int>(points.front().size());
  const double n = static_cast<double>(points.size());

  Vec mean = Vec::Zero(dim);
  for (const Vec& p : points) mean += p;
  mean /= n;

  Mat cov = Mat::Zero(dim, dim);
  for (const Vec& p : points) {
    const Vec c = p - mean;
    cov += c * c.transpose();
  }
  cov /= n;
  if (cov.trace() <= 0.0) fail(ErrorCode::DegeneratePointSet, "all points coincide");

  Eigen::SelfAdjointEigenSolver<Mat> eig(cov);
  Vec dir = canonical(eig.eigenvectors().col(dim - 1).normalized());

  double along2 = 0.0, perp2 = 0.0;
  for (const Vec& p : points) {
    const Vec c = p - mean;
    const double a = c.dot(dir);
    along2 += a * a;
    perp2 += (c - a * dir).squaredNorm();
  }
  LineFit fit;
  fit.base = mean;
  fit.dir = dir;
  fit.n_points = static_cast<int>(points.size());
  fit.residual_rms = std::sqrt(perp2 / n);
  fit.spread = std::sqrt(along2 / n);
  if (fit.spread <= 0.0) fail(ErrorCode::DegeneratePointSet, "points have no extent");
  fit.residual_norm = std::min(1.0, fit.residual_rms / fit.spread);
  return fit;
}

CentroidLine centroid_line(const ConvexSet& set, const Vec& u, int n_levels, double rel_tol) {
  const auto levels = sample_levels(set, u, n_levels);
  CentroidLine line;
  line.sections = sample_sections(set, u, levels, rel_tol);
  std::vector<Vec> pts;
  for (const auto& s : line.sections) {
    pts.push_back(s.centroid);
    line.max_centroid_err = std::max(line.max_centroid_err, s.centroid_err);
  }
  line.fit = fit_line(pts);
  return line;
}

LineFit sccp_residual(const ConvexSet& set, const Vec& u, int n_levels) {
  if (!section_bounded(set, u)) fail(ErrorCode::UnboundedSection, "sections with this normal are unbounded");
  return centroid_line(set, u, n_levels).fit;
}

LineFamilyVerdict classify_lines(std::span<const LineFit> lines, double tol) {
  if (lines.size() < 3) fail(ErrorCode::InvalidArgument, "need at least 3 lines");
  const int dim = static_cast<int>(lines.front().base.size());
  const double n = static_cast<double>(lines.size());

  LineFamilyVerdict v;
  Vec mean_base = Vec::Zero(dim);
  for (const auto& l : lines) {
    mean_base += l.base;
    v.max_residual_norm = std::max(v.max_residual_norm, l.residual_norm);
  }
  mean_base /= n;
  double scale = 1.0;
  for (const auto& l : lines) {
    scale = std::max({scale, (l.base - mean_base).norm(), l.spread});
  }
  v.scale = scale;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      v.max_angle = std::max(v.max_angle, line_angle(lines[i].dir, lines[j].dir));
    }
  }

  // Least-squares common point: sum_i (I - d_i d_i^T) (p - b_i) = 0.
  Mat m = Mat::Zero(dim, dim);
  Vec rhs = Vec::Zero(dim);
  for (const auto& l : lines) {
    const Mat proj = Mat::Identity(dim, dim) - l.dir * l.dir.transpose();
    m += proj;
    rhs += proj * l.base;
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(m / n);
  const bool well_posed = eig.eigenvalues().minCoeff() >= 1e-10;

  bool concurrent = false;
  double conc_score = 1.0;
  Vec point = Vec::Zero(dim);
  if (well_posed) {
    point = m.ldlt().solve(rhs);
    double sum2 = 0.0;
    for (const auto& l : lines) {
      const Vec c = point - l.base;
      const double d = (c - c.dot(l.dir) * l.dir).norm() / scale;
      v.max_distance = std::max(v.max_distance, d);
      sum2 += d * d;
    }
    conc_score = std::sqrt(sum2 / n);
    concurrent = v.max_distance <= tol;
  }

  Vec mean_dir = Vec::Zero(dim);
  for (const auto& l : lines) mean_dir += (l.dir.dot(lines.front().dir) < 0 ? -1.0 : 1.0) * l.dir;
  mean_dir = canonical(mean_dir.normalized());
  double ang2 = 0.0;
  for (const auto& l : lines) ang2 += std::pow(line_angle(l.dir, mean_dir), 2);
  const double par_score = std::sqrt(ang2 / n);
  const bool parallel = v.max_angle <= tol;

  if (v.max_residual_norm > tol) {
    v.tag = LineFamilyTag::neither;
    v.witness = Vec::Zero(dim);
    v.score = v.max_residual_norm;
    return v;
  }
  if (concurrent) {
    v.tag = LineFamilyTag::concurrent;
    v.witness = point;
    v.score = conc_score;
    v.tie = parallel;
  } else if (parallel) {
    v.tag = LineFamilyTag::parallel;
    v.witness = mean_dir;
    v.score = par_score;
  } else {
    v.tag = LineFamilyTag::neither;
    v.witness = Vec::Zero(dim);
    v.score = std::min(conc_score, par_score);
  }
  return v;
}

double cone_direction_check(const BodySpec& body, const Vec& u, int n_levels) {
  const ConeDescriptor cone = body.recession_cone();
  if (cone.cone_dim() < 1) fail(ErrorCode::InvalidArgument, "body has a trivial recession cone");
  if (cone.cone_dim() < body.dim()) {
    fail(ErrorCode::ConeSectionUnbounded, "recession cone " + cone.describe() +
                                              " has measure-zero sections");
  }
  if (!section_bounded(cone, u)) {
    fail(ErrorCode::ConeSectionUnbounded, "cone sections with this normal are unbounded");
  }
  const Vec body_dir = sccp_residual(body, u, n_levels).dir;

  // Cone sections are homothetic in t, so two levels fix the line.
  const Interval iv = admissible_levels(cone, u);
  const double sign = iv.hi.is_pos_inf() ? 1.0 : -1.0;
  const Vec c1 = section_stats(cone, u, sign * 1.0).centroid;
  const Vec c2 = section_stats(cone, u, sign * 2.0).centroid;
  const Vec cone_dir = canonical((c2 - c1).normalized());
  return line_angle(body_dir, cone_dir);
}

}  // namespace convsec
