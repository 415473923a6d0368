#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "isoptic/conics.hpp"
#include "isoptic/tangents.hpp"
#include "support/focus.hpp"
#include "support/samplers.hpp"

using namespace isoptic;
using namespace isoptic::testing;

namespace {

constexpr auto Eu = GeometryKind::Euclidean;
constexpr auto H = GeometryKind::Hyperbolic;
constexpr auto El = GeometryKind::Elliptic;

ConicSpec central(GeometryKind g, double a, double f) { return {.geometry = g, .family = Family::CentralConic, .a = a, .f = f}; }
ConicSpec parabola(GeometryKind g, double p) { return {.geometry = g, .family = Family::Parabola, .p = p}; }
ConicSpec euclid(CentralType t, double a, double b) {
  return {.geometry = Eu, .family = Family::CentralConic, .a = a, .b = b, .euclidean_type = t};
}

template <class F>
void expect_error(F&& f, ErrorKind kind) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

const QuadraticForm kUnitCircle{.A = 1, .C = 1, .F = -1};

}  // namespace

TEST(Validate, ParameterRanges) {
  expect_error([] { validate(central(H, 0.5, 1.0)); }, ErrorKind::ImproperFocus);
  expect_error([] { validate(parabola(H, 1.0)); }, ErrorKind::ImproperFocus);
  expect_error([] { validate({.geometry = H, .family = Family::Segment, .a = 1.2}); }, ErrorKind::Validation);
  EXPECT_NO_THROW(validate({.geometry = H, .family = Family::Segment, .a = 1.0}));
  EXPECT_NO_THROW(validate({.geometry = El, .family = Family::Segment, .a = 3.0}));
  expect_error([] { validate(euclid(CentralType::Ellipse, 1, 0)); }, ErrorKind::Validation);
  expect_error([] { validate(central(El, 0.5, -0.1)); }, ErrorKind::Validation);
  expect_error([] { validate(central(H, NAN, 0.5)); }, ErrorKind::Validation);
  // Elliptic foci are accepted beyond f = 1.
  EXPECT_NO_THROW(validate(central(El, 0.7, 1.0)));
  EXPECT_NO_THROW(validate(central(El, 1.2, 2.5)));
}

TEST(CentralConicForm, ModelShapesOfFig5) {
  EXPECT_EQ(model_shape(central_conic_form(central(H, 0.7, 0.59))), ModelShape::Ellipse);
  EXPECT_EQ(model_shape(central_conic_form(central(H, 0.35, 0.55))), ModelShape::Hyperbola);
}

TEST(CentralConicForm, Coefficients) {
  const double a = 0.7, f = 0.59, ch = std::cosh(a);
  const QuadraticForm q = central_conic_form(central(H, a, f));
  EXPECT_NEAR(q.A, 1 / std::pow(std::tanh(a), 2), 1e-14);
  EXPECT_NEAR(q.C, 1 / (1 + 1 / ((f * f - 1) * ch * ch)), 1e-14);
  EXPECT_EQ(q.F, -1.0);
  EXPECT_EQ(central_conic_form(euclid(CentralType::Hyperbola, 2, 3)), (QuadraticForm{.A = 9, .C = -4, .F = -36}));
}

TEST(CentralConicForm, EllipticDegenerate) {
  // (1 + f^2) cos^2 a = 1  <=>  a = atan f
  const double f = 0.75;
  expect_error([&] { central_conic_form(central(El, std::atan(f), f)); }, ErrorKind::DegenerateConic);
}

TEST(ParabolaForm, Examples) {
  const double p = 0.25;
  // x^2 + (1 - p y)^2 / (1 - p^2) = 1
  const QuadraticForm expected{.A = 1 - p * p, .C = p * p, .E = -2 * p, .F = p * p};
  EXPECT_EQ(parabola_form(parabola(H, p)), expected);
  const QuadraticForm eu = parabola_form(parabola(Eu, 1.3));
  EXPECT_NEAR(eu(0, 0.65), 0.0, 1e-15);
  const double y = (std::sqrt(3.25) - 1) / 1.5;
  EXPECT_NEAR(parabola_form(parabola(El, 1.5))(0, y), 0.0, 1e-14);
  expect_error([] { parabola_form(parabola(H, 1.5)); }, ErrorKind::ImproperFocus);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_central(central(H, 0.7, 0.59)), CentralType::Ellipse);
  EXPECT_EQ(classify_central(central(H, 0.35, 0.55)), CentralType::Hyperbola);
  EXPECT_EQ(classify_central(central(El, 0.7, 0.8)), CentralType::Ellipse);
  EXPECT_EQ(classify_central(central(El, 0.7, 1.0)), CentralType::Hyperbola);
  EXPECT_EQ(classify_central(euclid(CentralType::Hyperbola, 1, 2)), CentralType::Hyperbola);
}

TEST(Classify, MatchesFocalDistance) {
  for (auto g : {H, El}) {
    for (double a = 0.05; a < 1.5; a += 0.07) {
      for (double f = 0.05; f < (g == H ? 0.99 : 3.0); f += 0.06) {
        const ConicSpec s = central(g, a, f);
        // Elliptic: distance of the chart lifts, which exceeds pi/2 once f > 1.
        const double d = g == H ? distance(g, chart_point(f, 0), chart_point(-f, 0)) : 2 * std::atan(f);
        if (std::abs(2 * a - d) < 1e-6) continue;
        const bool ellipse = 2 * a > d;
        const CentralType t = classify_central(s);
        EXPECT_EQ(t, ellipse ? CentralType::Ellipse : CentralType::Hyperbola) << to_string(g) << " a=" << a << " f=" << f;
        const ModelShape shape = model_shape(central_conic_form(s));
        EXPECT_EQ(shape, t == CentralType::Ellipse ? ModelShape::Ellipse : ModelShape::Hyperbola);
      }
    }
  }
}

TEST(Classify, Degenerate) {
  const double f = 0.5;
  expect_error([&] { classify_central(central(H, std::atanh(f), f)); }, ErrorKind::DegenerateConic);
}

TEST(ImplicitValue, Examples) {
  EXPECT_DOUBLE_EQ(implicit_value(kUnitCircle, {1, 1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(implicit_value(kUnitCircle, {1, 0, 0}), -1.0);
  EXPECT_DOUBLE_EQ(implicit_value(kUnitCircle, {2, 0, 0}), -1.0);
  const double a = 0.7;
  EXPECT_NEAR(implicit_value(central_conic_form(central(H, a, 0.59)), {1, std::tanh(a), 0}), 0.0, 1e-14);
  expect_error([] { implicit_value(kUnitCircle, {0, 1, 0}); }, ErrorKind::IdealPoint);
}

TEST(TangentAt, Examples) {
  EXPECT_EQ(tangent_at(kUnitCircle, {1, 1, 0}), ProjectiveLine(-1, 1, 0));
  const double a = 0.7;
  EXPECT_EQ(tangent_at(central_conic_form(central(H, a, 0.59)), {1, std::tanh(a), 0}),
            ProjectiveLine(-std::tanh(a), 1, 0));
  const double p = 0.8;
  EXPECT_EQ(tangent_at(parabola_form(parabola(Eu, p)), {1, 0, p / 2}), ProjectiveLine(-p / 2, 0, 1));
  expect_error([] { tangent_at(kUnitCircle, {1, 0.5, 0}); }, ErrorKind::NotOnCurve);
  // A pair of lines x^2 - y^2 = 0 is singular at the origin.
  expect_error([] { tangent_at({.A = 1, .C = -1}, {1, 0, 0}); }, ErrorKind::SingularPoint);
}

TEST(QuadraticFormEq, ScaleInvariant) {
  EXPECT_EQ(kUnitCircle, (QuadraticForm{.A = -3, .C = -3, .F = 3}));
  EXPECT_FALSE(kUnitCircle == (QuadraticForm{.A = 1, .C = 2, .F = -1}));
}

TEST(FocalPoints, Families) {
  EXPECT_EQ(focal_points(euclid(CentralType::Ellipse, 5, 3))[0], chart_point(4, 0));
  EXPECT_EQ(focal_points(euclid(CentralType::Ellipse, 3, 5))[0], chart_point(0, 4));
  EXPECT_EQ(focal_points(euclid(CentralType::Hyperbola, 3, 4))[1], chart_point(-5, 0));
  EXPECT_EQ(focal_points(parabola(H, 0.25))[0], chart_point(0, 0.25));
  EXPECT_EQ(segment_endpoints({.geometry = H, .family = Family::Segment, .a = 0.4}).second, chart_point(-0.4, 0));
}

struct FocusCase {
  ConicSpec spec;
  double radius;
};

class FocusProperty : public ::testing::TestWithParam<FocusCase> {};

TEST_P(FocusProperty, HoldsOnRandomPoints) {
  const auto& c = GetParam();
  const auto pts = on_curve_points(c.spec, 100, 99, c.radius);
  ASSERT_EQ(pts.size(), 100u);
  const QuadraticForm q = conic_form(c.spec).normalized();
  for (auto [x, y] : pts) {
    EXPECT_LE(std::abs(q(x, y)), 1e-12);
    EXPECT_LE(focus_defect(c.spec, x, y), 1e-9) << x << "," << y;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Families, FocusProperty,
    ::testing::Values(FocusCase{central(H, 0.7, 0.59), 0.999}, FocusCase{central(H, 0.35, 0.55), 0.999},
                      FocusCase{central(H, 1.3, 0.3), 0.999}, FocusCase{parabola(H, 0.25), 0.999},
                      FocusCase{parabola(H, 0.8), 0.999}, FocusCase{central(El, 0.7, 0.8), 20},
                      FocusCase{central(El, 0.7, 1.0), 20}, FocusCase{central(El, 0.3, 0.9), 20},
                      FocusCase{parabola(El, 0.25), 20}, FocusCase{parabola(El, 1.5), 20},
                      FocusCase{euclid(CentralType::Ellipse, 4, 1.5), 100},
                      FocusCase{euclid(CentralType::Hyperbola, 5, 3), 100}, FocusCase{parabola(Eu, 0.5), 100}));

TEST(TangentAt, DoubleRootOnRandomPoints) {
  for (const ConicSpec& s : {central(H, 0.7, 0.59), central(H, 0.35, 0.55), parabola(H, 0.25), central(El, 0.7, 0.8),
                             parabola(El, 1.5), euclid(CentralType::Hyperbola, 5, 3)}) {
    const QuadraticForm q = conic_form(s);
    for (auto [x, y] : on_curve_points(s, 100, 3, s.geometry == H ? 0.999 : 20)) {
      const ProjectiveLine t = tangent_at(q, chart_point(x, y));
      EXPECT_LE(std::abs(intersect(q, t).relative_discriminant), 1e-9);
    }
  }
}
