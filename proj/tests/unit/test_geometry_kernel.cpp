#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isoptic/geometry_kernel.hpp"

using namespace isoptic;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr auto H = GeometryKind::Hyperbolic;
constexpr auto E = GeometryKind::Elliptic;

template <class F>
void expect_error(F&& f, ErrorKind kind) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Homogeneous, RejectsZeroAndNonFinite) {
  expect_error([] { HomogeneousPoint(0, 0, 0); }, ErrorKind::Validation);
  expect_error([] { ProjectiveLine(1, NAN, 0); }, ErrorKind::Validation);
  expect_error([] { HomogeneousPoint(INFINITY, 0, 0); }, ErrorKind::Validation);
}

TEST(Homogeneous, EqualityIsScaleInvariant) {
  EXPECT_EQ(HomogeneousPoint(1, 2, 3), HomogeneousPoint(-2, -4, -6));
  EXPECT_EQ(ProjectiveLine(0, 0, 1), ProjectiveLine(0, 0, -7.5));
  EXPECT_FALSE(HomogeneousPoint(1, 2, 3) == HomogeneousPoint(1, 2, 3.001));
}

TEST(Homogeneous, AffineChart) {
  const auto xy = HomogeneousPoint(2, 1, -4).affine();
  ASSERT_TRUE(xy);
  EXPECT_DOUBLE_EQ(xy->first, 0.5);
  EXPECT_DOUBLE_EQ(xy->second, -2.0);
  EXPECT_FALSE(HomogeneousPoint(0, 1, 1).affine());
  EXPECT_DOUBLE_EQ(HomogeneousPoint(4, 2, 0).normalized()[1], 0.5);
}

TEST(Epsilon, SignatureByGeometry) {
  EXPECT_EQ(epsilon(H), -1.0);
  EXPECT_EQ(epsilon(E), 1.0);
  expect_error([] { epsilon(GeometryKind::Euclidean); }, ErrorKind::UnsupportedGeometry);
}

TEST(PointForm, Examples) {
  EXPECT_DOUBLE_EQ(point_form(H, {1, 0, 0}, {1, 0, 0}), -1.0);
  EXPECT_DOUBLE_EQ(point_form(E, {1, 0, 0}, {0, 1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(point_form(H, {1, 0.5, 0}, {1, 0.5, 0}), -0.75);
  expect_error([] { point_form(GeometryKind::Euclidean, {1, 0, 0}, {1, 0, 0}); }, ErrorKind::UnsupportedGeometry);
}

TEST(LineForm, Examples) {
  EXPECT_DOUBLE_EQ(line_form(H, {0, 1, 0}, {0, 0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(line_form(E, {1, 0.3, -2}, {1, 0.3, -2}), 1 + 0.09 + 4);
  EXPECT_DOUBLE_EQ(line_form(H, {1, 2, 0}, {1, 2, 0}), 3.0);
  expect_error([] { line_form(GeometryKind::Euclidean, {1, 0, 0}, {1, 0, 0}); }, ErrorKind::UnsupportedGeometry);
}

TEST(ClassifyPoint, Examples) {
  EXPECT_EQ(classify_point(H, {1, 0, 0}), PointClass::Proper);
  EXPECT_EQ(classify_point(H, {1, 1, 0}), PointClass::Absolute);
  EXPECT_EQ(classify_point(H, {1, 2, 0}), PointClass::Outer);
  EXPECT_EQ(classify_point(H, {1, std::cos(0.3), std::sin(0.3)}), PointClass::Absolute);
  EXPECT_EQ(classify_point(E, {1, 2, 0}), PointClass::Proper);
  EXPECT_EQ(classify_point(E, {0, 1, 0}), PointClass::Proper);
}

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(distance(H, {1, 0, 0}, {1, 0, 0}), 0.0);
  EXPECT_NEAR(distance(E, {1, 0, 0}, {0, 1, 0}), kPi / 2, 1e-15);
  EXPECT_NEAR(distance(H, {1, 0, 0}, {1, 0.5, 0}), std::acosh(2 / std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(distance(H, {1, 0, 0}, {1, 0.5, 0}), 0.549306, 1e-6);
}

TEST(Distance, RequiresProperPoints) {
  expect_error([] { distance(H, {1, 0, 0}, {1, 1, 0}); }, ErrorKind::Domain);
  expect_error([] { distance(H, {1, 2, 0}, {1, 0, 0}); }, ErrorKind::Domain);
  expect_error([] { distance(GeometryKind::Euclidean, {1, 0, 0}, {1, 0, 0}); }, ErrorKind::UnsupportedGeometry);
}

TEST(Distance, CoincidentPointsClampToZero) {
  const HomogeneousPoint p(1, 0.3, 0.4);
  EXPECT_EQ(distance(H, p, HomogeneousPoint(3, 0.9, 1.2)), 0.0);
  EXPECT_EQ(distance(E, p, HomogeneousPoint(-2, -0.6, -0.8)), 0.0);
}

TEST(LineAngle, Examples) {
  EXPECT_NEAR(line_angle(H, {0, 1, 0}, {0, 0, 1}), kPi / 2, 1e-15);
  const ProjectiveLine u(1, 0.4, -2);
  EXPECT_EQ(line_angle(E, u, u), 0.0);
  // Lines from (x, y) = (0, 1/sqrt 2) to the segment endpoints (+-1, 0).
  const double a = 1, x = 0, y = 1 / std::sqrt(2.0);
  const ProjectiveLine l1(1, -1 / a, -(a - x) / (y * a)), l2(1, 1 / a, -(a + x) / (y * a));
  EXPECT_NEAR(line_angle(H, l1, l2), kPi / 2, 1e-12);
}

TEST(LineAngle, ImproperIntersection) {
  // Lines x = 2 and y = 0 meet outside the disk.
  expect_error([] { line_angle(H, {-2, 1, 0}, {0, 0, 1}); }, ErrorKind::NoProperAngle);
}

TEST(Join, Examples) {
  const double a = 0.6;
  EXPECT_EQ(join({1, a, 0}, {1, -a, 0}), ProjectiveLine(0, 0, 1));
  EXPECT_EQ(join({1, 1, 0}, {1, 0, 1}), ProjectiveLine(1, -1, -1));
  const double x = 0.2, y = 0.35;
  EXPECT_EQ(join({1, a, 0}, {1, x, y}), ProjectiveLine(1, -1 / a, -(a - x) / (y * a)));
  expect_error([] { join({1, 2, 3}, {2, 4, 6}); }, ErrorKind::DegenerateJoin);
}

TEST(Meet, DualOfJoin) {
  EXPECT_EQ(meet({0, 1, 0}, {0, 0, 1}), HomogeneousPoint(1, 0, 0));
  expect_error([] { meet({0, 0, 1}, {0, 0, 3}); }, ErrorKind::DegenerateJoin);
}

TEST(Polar, Examples) {
  EXPECT_EQ(polar_line(H, {1, 0, 0}), ProjectiveLine(-1, 0, 0));
  EXPECT_EQ(polar_line(E, {1, 0, 0}), ProjectiveLine(1, 0, 0));
  EXPECT_NEAR(incidence({1, 2, 0}, polar_line(H, {1, 0.5, 0})), 0.0, 1e-15);
}

class KernelProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
  std::uniform_real_distribution<double> unit{-1.0, 1.0};

  HomogeneousPoint proper_point(GeometryKind g) {
    while (true) {
      const double x = unit(rng), y = unit(rng);
      if (g == E || x * x + y * y < 0.95) return {1, x, y};
    }
  }
  double scale() {
    double s = 0;
    while (std::abs(s) < 0.1) s = 10 * unit(rng);
    return s;
  }
};

TEST_F(KernelProperties, ScaleInvarianceAndSymmetry) {
  for (auto g : {H, E}) {
    for (int i = 0; i < 200; ++i) {
      const HomogeneousPoint x = proper_point(g), y = proper_point(g);
      const double lx = scale(), ly = scale();
      const HomogeneousPoint xs(lx * x.coords()), ys(ly * y.coords());
      const double d = distance(g, x, y);
      EXPECT_NEAR(distance(g, xs, ys), d, 1e-12);
      EXPECT_NEAR(distance(g, y, x), d, 1e-15);
      EXPECT_EQ(classify_point(g, xs), classify_point(g, x));
      // Two lines through x meet in a proper point.
      const ProjectiveLine u = join(x, y), v = join(x, proper_point(g));
      const double angle = line_angle(g, u, v);
      EXPECT_NEAR(line_angle(g, ProjectiveLine(lx * u.coords()), ProjectiveLine(ly * v.coords())), angle, 1e-9);
      EXPECT_NEAR(line_angle(g, v, u), angle, 1e-15);
    }
  }
}

TEST_F(KernelProperties, IncidenceContract) {
  for (int i = 0; i < 500; ++i) {
    const HomogeneousPoint p(5 * unit(rng), 5 * unit(rng), 5 * unit(rng));
    const HomogeneousPoint q(5 * unit(rng), 5 * unit(rng), 5 * unit(rng));
    const ProjectiveLine l = join(p, q);
    const double scale_p = norm(l.coords()) * norm(p.coords()), scale_q = norm(l.coords()) * norm(q.coords());
    EXPECT_LE(std::abs(incidence(p, l)), 1e-12 * scale_p);
    EXPECT_LE(std::abs(incidence(q, l)), 1e-12 * scale_q);
  }
}

TEST_F(KernelProperties, PolarityInvolution) {
  for (auto g : {H, E}) {
    for (int i = 0; i < 200; ++i) {
      const HomogeneousPoint p(unit(rng), 3 * unit(rng), 3 * unit(rng));
      EXPECT_EQ(pole(g, polar_line(g, p)), p);
    }
  }
}

TEST_F(KernelProperties, EllipticDistanceBound) {
  for (int i = 0; i < 500; ++i) {
    const HomogeneousPoint x(unit(rng), 10 * unit(rng), 10 * unit(rng));
    const HomogeneousPoint y(unit(rng), 10 * unit(rng), 10 * unit(rng));
    EXPECT_LE(distance(E, x, y), kPi / 2 + 1e-12);
  }
}
