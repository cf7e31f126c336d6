#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "convsec/error.hpp"
#include "convsec/ext_real.hpp"
#include "convsec/parallel.hpp"
#include "convsec/sampling.hpp"

namespace convsec {
namespace {

TEST(ExtReal, OrderingAcrossKinds) {
  const ExtReal lo = ExtReal::neg_inf(), hi = ExtReal::pos_inf();
  EXPECT_LT(lo, ExtReal(-1e308));
  EXPECT_LT(ExtReal(1e308), hi);
  EXPECT_LT(ExtReal(1.0), ExtReal(2.0));
  EXPECT_FALSE(hi < hi);
  EXPECT_FALSE(lo < lo);
  EXPECT_LE(hi, hi);
  EXPECT_EQ(-hi, lo);
  EXPECT_EQ(-ExtReal(3.0), ExtReal(-3.0));
}

TEST(ExtReal, ArithmeticKeepsInfinity) {
  EXPECT_TRUE((ExtReal::pos_inf() + 5.0).is_pos_inf());
  EXPECT_TRUE((ExtReal::neg_inf() - 5.0).is_neg_inf());
  EXPECT_EQ((ExtReal(1.5) + 0.5).value(), 2.0);
}

TEST(ExtReal, ValueOfInfinityThrows) {
  EXPECT_THROW(ExtReal::pos_inf().value(), std::logic_error);
  EXPECT_TRUE(std::isinf(ExtReal::pos_inf().to_double()));
  EXPECT_EQ(ExtReal::pos_inf().to_string(), "inf");
  EXPECT_EQ(ExtReal::neg_inf().to_string(), "-inf");
  EXPECT_EQ(ExtReal(0.25).to_string(), "0.25");
}

TEST(Interval, OpenEnds) {
  const Interval I{ExtReal(0.0), ExtReal::pos_inf()};
  EXPECT_FALSE(I.contains(0.0));
  EXPECT_TRUE(I.contains(1e300));
  EXPECT_FALSE(I.bounded());
  EXPECT_FALSE(I.empty());
  const Interval J{ExtReal(1.0), ExtReal(1.0)};
  EXPECT_TRUE(J.empty());
}

TEST(Error, CarriesCodeAndName) {
  try {
    fail(ErrorCode::UnboundedSection, "detail");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundedSection);
    EXPECT_STREQ(e.what(), "UnboundedSection: detail");
  }
}

TEST(Parallel, EveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, RethrowsLowestFailingIndex) {
  setenv("CONVSEC_THREADS", "4", 1);
  EXPECT_EQ(thread_count(), 4u);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i == 70 || i == 30) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "30");
  }
  unsetenv("CONVSEC_THREADS");
}

TEST(Parallel, InvalidThreadEnvFallsBack) {
  setenv("CONVSEC_THREADS", "zero", 1);
  EXPECT_GE(thread_count(), 1u);
  unsetenv("CONVSEC_THREADS");
}

TEST(Rng, SeededStreamIsReproducible) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(), b.uniform());
  const Vec v = Rng(7).unit_vector(3);
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
}

}  // namespace
}  // namespace convsec
