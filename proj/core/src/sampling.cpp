#include "convsec/sampling.hpp"

#include <cmath>
#include <numbers>

#include "convsec/cone.hpp"
#include "convsec/error.hpp"

namespace convsec {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec Rng::unit_vector(int dim) {
  Vec v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = normal();
  } while (v.norm() < 1e-12);
  return v.normalized();
}

std::vector<Vec> sample_section_normals(const ConvexSet& set, int n, std::uint64_t seed,
                                        double min_margin) {
  const ConeDescriptor cone = set.recession_cone();
  Rng rng(seed);
  std::vector<Vec> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < n) {
    if (++attempts > 1000000) fail(ErrorCode::InvalidArgument, "could not sample admissible normals");
    Vec u = rng.unit_vector(set.dim());
    if (cone.kind() == ConeDescriptor::Kind::trivial) {
      out.push_back(u);
      continue;
    }
    if (cone.positivity_margin(-u) > cone.positivity_margin(u)) u = -u;
    if (cone.positivity_margin(u) >= min_margin) out.push_back(u);
  }
  return out;
}

}  // namespace convsec
