#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "convsec/convex_set.hpp"

namespace convsec {

/// Deterministic random source: mt19937_64 with hand-rolled conversions, so
/// a seed produces the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform direction on the unit sphere.
  Vec unit_vector(int dim);

 private:
  std::mt19937_64 engine_;
};

/// n unit normals u whose sections are bounded, with the recession cone at
/// least `min_margin` away from u^perp (see ConeDescriptor::positivity_margin).
/// Each u is oriented so that u itself is the positive side when the cone is
/// nontrivial.
std::vector<Vec> sample_section_normals(const ConvexSet& set, int n, std::uint64_t seed,
                                        double min_margin = 0.2);

}  // namespace convsec
