#pragma once

#include <cmath>
#include <initializer_list>

#include <Eigen/Core>

namespace convsec {

/// Point or vector in R^2 or R^3. Storage is inline (max 3 entries), so
/// copies never touch the heap.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                          Eigen::ColMajor, 3, 3>;

inline Vec make_vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline Vec unit_axis(int dim, int axis) {
  Vec e = Vec::Zero(dim);
  e(axis) = 1.0;
  return e;
}

/// Unit vector check used by every oracle taking a direction.
inline bool is_unit(const Vec& u, double tol = 1e-12) {
  return std::abs(u.norm() - 1.0) <= tol;
}

}  // namespace convsec
