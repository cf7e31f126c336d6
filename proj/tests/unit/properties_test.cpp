#include <string>
#include <utility>

#include <gtest/gtest.h>

#include "properties.hpp"

namespace convsec::testing {
namespace {

using Property = PropertyResult (*)(long, std::uint64_t);

class Properties : public ::testing::TestWithParam<std::pair<const char*, Property>> {};

TEST_P(Properties, HoldOnSmallSample) {
  const PropertyResult r = GetParam().second(300, 7);
  EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, worst " << r.worst << ", first "
                      << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(
    All, Properties,
    ::testing::Values(std::pair<const char*, Property>{"convexity", prop_convexity},
                      std::pair<const char*, Property>{"support_duality", prop_support_duality},
                      std::pair<const char*, Property>{"gauss_round_trip", prop_gauss_round_trip},
                      std::pair<const char*, Property>{"boundary_hit", prop_boundary_hit},
                      std::pair<const char*, Property>{"recession_limit", prop_recession_limit},
                      std::pair<const char*, Property>{"section_invariants", prop_section_invariants},
                      std::pair<const char*, Property>{"affine_equivariance", prop_affine_equivariance},
                      std::pair<const char*, Property>{"cone_scaling", prop_cone_scaling},
                      std::pair<const char*, Property>{"fit_line_equivariance", prop_fit_line_equivariance},
                      std::pair<const char*, Property>{"cut_monotonicity", prop_cut_monotonicity},
                      std::pair<const char*, Property>{"fubini_consistency", prop_fubini_consistency}),
    [](const auto& info) { return std::string(info.param.first); });

}  // namespace
}  // namespace convsec::testing
