#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "catalog.hpp"
#include "convsec/bodies.hpp"
#include "convsec/error.hpp"

namespace convsec {
namespace {

const BodySpec kDisk = BodySpec::ball(2, 1.0);
const BodySpec kParabola = BodySpec::paraboloid(2);
const BodySpec kHyperbola = BodySpec::hyperboloid_sheet(2);

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no convsec::Error thrown";
  return ErrorCode::InvalidArgument;
}

void expect_vec_near(const Vec& a, const Vec& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_LE((a - b).norm(), tol) << "got " << a.transpose() << ", want " << b.transpose();
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(kDisk, make_vec({0, 0})));
  EXPECT_FALSE(contains(kParabola, make_vec({1, 0.5})));
  EXPECT_TRUE(contains(kHyperbola, make_vec({0, 1})));
}

TEST(Support, Examples) {
  EXPECT_EQ(support(kDisk, make_vec({1, 0})), ExtReal(1.0));
  EXPECT_EQ(support(kParabola, make_vec({0, -1})), ExtReal(0.0));
  EXPECT_TRUE(support(kParabola, make_vec({0, 1})).is_pos_inf());
}

TEST(Support, ClosedFormsAndTranslation) {
  const BodySpec e = BodySpec::ellipsoid({2.0, 1.0}, make_vec({1.0, -1.0}));
  const Vec u = make_vec({1.0, 1.0}) / std::sqrt(2.0);
  // sqrt(sum a_i^2 u_i^2) + <u, center>
  EXPECT_NEAR(e.support(u).value(), std::sqrt(2.5) + 0.0, 1e-14);
  // Parabola y >= x^2 with u = (s, -c): h = s^2 / (4c).
  const Vec w = make_vec({0.6, -0.8});
  EXPECT_NEAR(kParabola.support(w).value(), 0.36 / 3.2, 1e-14);
  // Hyperbola: h(u) = -sqrt(u_y^2 - u_x^2) on the dual cone.
  EXPECT_NEAR(kHyperbola.support(w).value(), -std::sqrt(0.64 - 0.36), 1e-14);
  EXPECT_TRUE(kHyperbola.support(make_vec({0.8, -0.6})).is_pos_inf());
}

TEST(Support, FunctionEpigraphMatchesConjugate) {
  const BodySpec exp = BodySpec::function_epigraph(2, GraphFunction::exp);
  // h(w, -1)/|(w,-1)| with sup_x (w x - e^x) = w log w - w.
  const double w = 2.0;
  const Vec u = make_vec({w, -1.0}) / std::sqrt(w * w + 1.0);
  EXPECT_NEAR(exp.support(u).value(), (w * std::log(w) - w) / std::sqrt(w * w + 1.0), 1e-10);
  EXPECT_TRUE(exp.support(make_vec({-0.6, -0.8})).is_pos_inf());
  EXPECT_TRUE(graph_conjugate(GraphFunction::exp, -1.0).is_pos_inf());
  EXPECT_NEAR(graph_conjugate(GraphFunction::quartic, 4.0).value(), 3.0, 1e-10);
}

TEST(Gauge, Examples) {
  EXPECT_NEAR(gauge(kDisk, make_vec({2, 0})).value(), 2.0, 1e-12);
  EXPECT_EQ(gauge(kDisk, make_vec({0, 0})), ExtReal(0.0));
  const BodySpec shifted = kParabola.translated(make_vec({0, -1}));
  EXPECT_EQ(gauge(shifted, make_vec({0, 5})), ExtReal(0.0));
  EXPECT_EQ(code_of([&] { gauge(kParabola, make_vec({1, 1})); }), ErrorCode::OriginNotInterior);
}

TEST(Gauge, EllipseScaling) {
  const BodySpec e = BodySpec::ellipsoid({2.0, 1.0});
  EXPECT_NEAR(gauge(e, make_vec({1.0, 1.0})).value(), std::sqrt(0.25 + 1.0), 1e-12);
}

TEST(BoundaryHit, Examples) {
  EXPECT_NEAR(boundary_hit(kDisk, make_vec({0, 0}), make_vec({1, 0})).value(), 1.0, 1e-12);
  const BodySpec shifted = kParabola.translated(make_vec({0, -1}));
  EXPECT_TRUE(boundary_hit(shifted, make_vec({0, 0}), make_vec({0, 1})).is_pos_inf());
  const BodySpec e = BodySpec::ellipsoid({2.0, 1.0});
  EXPECT_NEAR(boundary_hit(e, make_vec({0, 0}), make_vec({1, 0})).value(), 2.0, 2e-12);
}

TEST(BoundaryHit, Errors) {
  EXPECT_EQ(code_of([&] { boundary_hit(kDisk, make_vec({1, 0}), make_vec({1, 0})); }),
            ErrorCode::NotInterior);
  EXPECT_EQ(code_of([&] { boundary_hit(kDisk, make_vec({0, 0}), make_vec({2, 0})); }),
            ErrorCode::InvalidArgument);
}

TEST(OuterNormal, Examples) {
  const BodySpec sphere = BodySpec::ball(3, 1.0);
  expect_vec_near(sphere.outer_normal(make_vec({0, 0, 1})), make_vec({0, 0, 1}), 1e-15);
  expect_vec_near(kParabola.outer_normal(make_vec({1, 1})), make_vec({2, -1}) / std::sqrt(5.0),
                  1e-15);
  expect_vec_near(kHyperbola.outer_normal(make_vec({0, 1})), make_vec({0, -1}), 1e-15);
  EXPECT_EQ(code_of([&] { kParabola.outer_normal(make_vec({0, 5})); }), ErrorCode::NotOnBoundary);
}

TEST(OuterNormal, PointsAwayFromInterior) {
  for (const auto& [name, body] : testing::catalog()) {
    if (body.kind() == BodyKind::circular_cone) continue;
    const Vec dir = unit_axis(body.dim(), 0);
    const Vec p = body.interior_point() +
                  boundary_hit(body, body.interior_point(), dir).value() * dir;
    EXPECT_GT(body.outer_normal(p).dot(p - body.interior_point()), 0.0) << name;
  }
}

TEST(InverseGauss, Examples) {
  expect_vec_near(kDisk.inverse_gauss(make_vec({0, 1})), make_vec({0, 1}), 1e-15);
  expect_vec_near(kParabola.inverse_gauss(make_vec({2, -1}) / std::sqrt(5.0)), make_vec({1, 1}),
                  1e-14);
  EXPECT_EQ(code_of([&] { kParabola.inverse_gauss(make_vec({0, 1})); }),
            ErrorCode::InadmissibleNormal);
  EXPECT_FALSE(kParabola.admits_normal(make_vec({0, 1})));
}

TEST(InverseGauss, ConesHaveNoUniqueContact) {
  const BodySpec cone = BodySpec::circular_cone(2, 1.0);
  EXPECT_EQ(code_of([&] { cone.inverse_gauss(make_vec({1, -1}) / std::sqrt(2.0)); }),
            ErrorCode::InadmissibleNormal);
}

TEST(RecessionCone, Examples) {
  const BodySpec exp = BodySpec::function_epigraph(2, GraphFunction::exp);
  EXPECT_EQ(exp.recession_cone(), ConeDescriptor::orthant(2));
  EXPECT_EQ(kParabola.recession_cone(), ConeDescriptor::ray(2));
  const ConeDescriptor c = kHyperbola.recession_cone();
  EXPECT_EQ(c, ConeDescriptor::elliptic({1.0}));
  EXPECT_TRUE(c.contains_direction(make_vec({1, 1})));
  EXPECT_FALSE(c.contains_direction(make_vec({1, 0.9})));
}

TEST(RecessionCone, PerKind) {
  EXPECT_EQ(BodySpec::ellipsoid({1, 2, 3}).recession_cone().cone_dim(), 0);
  EXPECT_EQ(BodySpec::superellipsoid(2, 4.0).recession_cone().cone_dim(), 0);
  EXPECT_EQ(BodySpec::function_epigraph(2, GraphFunction::quartic).recession_cone(),
            ConeDescriptor::ray(2));
  EXPECT_EQ(BodySpec::function_epigraph(2, GraphFunction::cosh).recession_cone(),
            ConeDescriptor::ray(2));
  EXPECT_EQ(BodySpec::hyperboloid_sheet(3, {1.0, 2.0}).recession_cone(),
            ConeDescriptor::elliptic({1.0, 0.5}));
  EXPECT_EQ(BodySpec::circular_cone(3, 2.0).recession_cone(),
            ConeDescriptor::elliptic({2.0, 2.0}));
  EXPECT_EQ(BodySpec::function_epigraph(3, GraphFunction::exp).recession_cone(),
            ConeDescriptor::orthant(3));
}

TEST(Cone, PolarAndPositivity) {
  const ConeDescriptor c = ConeDescriptor::elliptic({1.0});
  EXPECT_EQ(c.support(make_vec({0.5, -1.0})), ExtReal(0.0));
  EXPECT_TRUE(c.support(make_vec({1.0, -0.5})).is_pos_inf());
  EXPECT_TRUE(c.strictly_positive(make_vec({0.2, 1.0})));
  EXPECT_FALSE(c.strictly_positive(make_vec({1.0, 1.0})));
  EXPECT_EQ(c.cone_dim(), 2);
  EXPECT_TRUE(ConeDescriptor::trivial(3).strictly_positive(make_vec({1, 0, 0})));
}

TEST(Cone, BoundaryShellOnCircle) {
  const auto pts = ConeDescriptor::elliptic({1.0}).boundary_shell(10.0, 8);
  ASSERT_EQ(pts.size(), 2u);
  for (const Vec& p : pts) {
    EXPECT_NEAR(p.norm(), 10.0, 1e-12);
    EXPECT_NEAR(std::abs(p(0)), p(1), 1e-12);
  }
}

TEST(GraphPoint, LiesOnBoundary) {
  const BodySpec p = BodySpec::paraboloid(3, {1.0, 2.0}, make_vec({0.5, 0.0, -1.0}));
  const Vec x = p.graph_point(make_vec({1.5, 1.0}));
  expect_vec_near(x, make_vec({1.5, 1.0, 1.0 + 2.0 - 1.0}), 1e-14);
  EXPECT_EQ(code_of([&] { kDisk.graph_point(make_vec({0.0})); }), ErrorCode::NotGraphLike);
}

TEST(Validation, RejectsBadSpecs) {
  EXPECT_EQ(code_of([] { BodySpec::ball(4, 1.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec::ball(2, -1.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec::ellipsoid({1.0, 2.0}, make_vec({0, 0, 0})); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec::superellipsoid(2, 1.5); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec(BodyKind::function_epigraph, 2, {}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec(BodyKind::ellipsoid, 2, {1.0}, {}, GraphFunction::exp); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec(BodyKind::paraboloid, 3, {1.0, 2.0, 3.0}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { BodySpec::ball(2, std::nan("")); }), ErrorCode::InvalidArgument);
}

TEST(Validation, KindNamesRoundTrip) {
  for (BodyKind k : {BodyKind::ellipsoid, BodyKind::paraboloid, BodyKind::hyperboloid_sheet,
                     BodyKind::circular_cone, BodyKind::function_epigraph,
                     BodyKind::superellipsoid}) {
    EXPECT_EQ(parse_body_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_body_kind("torus").has_value());
  EXPECT_EQ(parse_graph_function("cosh"), GraphFunction::cosh);
}

TEST(Translated, ShiftsEverything) {
  const BodySpec e = BodySpec::ellipsoid({2.0, 1.0});
  const BodySpec f = e.translated(make_vec({1.0, 2.0}));
  EXPECT_TRUE(f.contains(make_vec({2.9, 2.0})));
  EXPECT_FALSE(f.contains(make_vec({-1.1, 2.0})));
  EXPECT_NEAR(f.support(make_vec({1, 0})).value(), 3.0, 1e-14);
  EXPECT_FALSE(e == f);
  EXPECT_TRUE(f == e.translated(make_vec({1.0, 2.0})));
}

}  // namespace
}  // namespace convsec
