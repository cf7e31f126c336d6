#include "convsec/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "convsec/error.hpp"

namespace convsec {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 3) fail(ErrorCode::InvalidArgument, "cone dimension must be 2 or 3");
}

}  // namespace

ConeDescriptor ConeDescriptor::trivial(int dim) {
  check_dim(dim);
  return {Kind::trivial, dim, {}};
}

ConeDescriptor ConeDescriptor::ray(int dim) {
  check_dim(dim);
  return {Kind::ray, dim, {}};
}

ConeDescriptor ConeDescriptor::elliptic(std::vector<double> slopes) {
  const int dim = static_cast<int>(slopes.size()) + 1;
  check_dim(dim);
  for (double c : slopes) {
    if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorCode::InvalidArgument, "cone slopes must be positive");
  }
  return {Kind::elliptic, dim, std::move(slopes)};
}

ConeDescriptor ConeDescriptor::orthant(int dim) {
  check_dim(dim);
  return {Kind::orthant, dim, {}};
}

int ConeDescriptor::cone_dim() const {
  switch (kind_) {
    case Kind::trivial: return 0;
    case Kind::ray: return 1;
    default: return dim_;
  }
}

std::string ConeDescriptor::describe() const {
  std::ostringstream os;
  const int last = dim_ - 1;
  switch (kind_) {
    case Kind::trivial: os << "{0}"; break;
    case Kind::ray: os << "ray {t e_" << last << " : t >= 0}"; break;
    case Kind::elliptic:
      os << "elliptic cone {x_" << last << " >= |(";
      for (std::size_t i = 0; i < slopes_.size(); ++i) os << (i ? ", " : "") << slopes_[i] << " x_" << i;
      os << ")|}";
      break;
    case Kind::orthant:
      os << "orthant {x_i <= 0 (i < " << last << "), x_" << last << " >= 0}";
      break;
  }
  return os.str();
}

double ConeDescriptor::level(const Vec& x) const {
  const int last = dim_ - 1;
  const double y = x(last);
  switch (kind_) {
    case Kind::trivial: return x.norm();
    case Kind::ray: return x.head(last).norm() + std::max(0.0, -y);
    case Kind::elliptic: {
      double q = 0.0;
      for (int i = 0; i < last; ++i) q += (slopes_[i] * x(i)) * (slopes_[i] * x(i));
      return std::sqrt(q) - y;
    }
    case Kind::orthant: {
      double m = -y;
      for (int i = 0; i < last; ++i) m = std::max(m, x(i));
      return m;
    }
  }
  return 0.0;
}

ExtReal ConeDescriptor::support(const Vec& u) const {
  const int last = dim_ - 1;
  const double uy = u(last);
  bool polar = false;
  switch (kind_) {
    case Kind::trivial: polar = true; break;
    case Kind::ray: polar = uy <= 0.0; break;
    case Kind::elliptic: {
      double q = 0.0;
      for (int i = 0; i < last; ++i) q += (u(i) / slopes_[i]) * (u(i) / slopes_[i]);
      polar = std::sqrt(q) <= -uy;
      break;
    }
    case Kind::orthant: {
      polar = uy <= 0.0;
      for (int i = 0; i < last; ++i) polar = polar && u(i) >= 0.0;
      break;
    }
  }
  return polar ? ExtReal(0.0) : ExtReal::pos_inf();
}

Vec ConeDescriptor::interior_point() const {
  const int last = dim_ - 1;
  Vec p = Vec::Zero(dim_);
  switch (kind_) {
    case Kind::elliptic: p(last) = 1.0; break;
    case Kind::orthant:
      p.setConstant(-1.0);
      p(last) = 1.0;
      break;
    default: break;
  }
  return p;
}

bool ConeDescriptor::contains_direction(const Vec& v) const {
  return level(v) <= 1e-12 * v.norm();
}

bool ConeDescriptor::strictly_positive(const Vec& a) const {
  const int last = dim_ - 1;
  const double ay = a(last);
  switch (kind_) {
    case Kind::trivial: return true;
    case Kind::ray: return ay > 0.0;
    case Kind::elliptic: {
      double q = 0.0;
      for (int i = 0; i < last; ++i) q += (a(i) / slopes_[i]) * (a(i) / slopes_[i]);
      return ay > std::sqrt(q);
    }
    case Kind::orthant: {
      bool ok = ay > 0.0;
      for (int i = 0; i < last; ++i) ok = ok && a(i) < 0.0;
      return ok;
    }
  }
  return false;
}

double ConeDescriptor::positivity_margin(const Vec& a) const {
  const int last = dim_ - 1;
  const double ay = a(last);
  switch (kind_) {
    case Kind::trivial: return 1.0;
    case Kind::ray: return ay;
    case Kind::elliptic: {
      double q = 0.0;
      for (int i = 0; i < last; ++i) q += (a(i) / slopes_[i]) * (a(i) / slopes_[i]);
      return ay - std::sqrt(q);
    }
    case Kind::orthant: {
      double m = ay;
      for (int i = 0; i < last; ++i) m = std::min(m, -a(i));
      return m;
    }
  }
  return 0.0;
}

std::vector<Vec> ConeDescriptor::boundary_shell(double radius, int samples_per_arc) const {
  std::vector<Vec> pts;
  const int last = dim_ - 1;
  constexpr double pi = std::numbers::pi;
  switch (kind_) {
    case Kind::trivial: break;
    case Kind::ray: pts.push_back(radius * unit_axis(dim_, last)); break;
    case Kind::elliptic:
      if (dim_ == 2) {
        const double c = slopes_[0];
        const double x = radius / std::sqrt(1.0 + c * c);
        pts.push_back(make_vec({x, c * x}));
        pts.push_back(make_vec({-x, c * x}));
      } else {
        for (int k = 0; k < samples_per_arc; ++k) {
          const double th = 2.0 * pi * k / samples_per_arc;
          Vec d = make_vec({std::cos(th) / slopes_[0], std::sin(th) / slopes_[1], 1.0});
          pts.push_back(radius * d.normalized());
        }
      }
      break;
    case Kind::orthant:
      if (dim_ == 2) {
        pts.push_back(make_vec({0.0, radius}));
        pts.push_back(make_vec({-radius, 0.0}));
      } else {
        for (int k = 0; k <= samples_per_arc; ++k) {
          const double ph = 0.5 * pi * k / samples_per_arc;
          const double s = radius * std::sin(ph), c = radius * std::cos(ph);
          pts.push_back(make_vec({0.0, -s, c}));
          if (k > 0) pts.push_back(make_vec({-s, 0.0, c}));
          if (k > 0 && k < samples_per_arc) pts.push_back(make_vec({-c, -s, 0.0}));
        }
      }
      break;
  }
  return pts;
}

}  // namespace convsec
