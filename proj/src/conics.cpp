#include "isoptic/conics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isoptic {

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::Segment: return "segment";
    case Family::CentralConic: return "central";
    case Family::Parabola: return "parabola";
  }
  return "unknown";
}

const char* to_string(CentralType t) noexcept { return t == CentralType::Ellipse ? "Ellipse" : "Hyperbola"; }

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const ConicSpec& s) {
  const bool hyperbolic = s.geometry == GeometryKind::Hyperbolic;
  const bool elliptic = s.geometry == GeometryKind::Elliptic;
  switch (s.family) {
    case Family::Segment:
      if (!positive_finite(s.a)) invalid("segment half-width a must be positive");
      if (hyperbolic && s.a > 1.0) invalid("hyperbolic segment half-width must satisfy 0 < a <= 1");
      return;
    case Family::CentralConic:
      if (!positive_finite(s.a)) invalid("semimajor axis a must be positive");
      if (s.geometry == GeometryKind::Euclidean) {
        if (!positive_finite(s.b)) invalid("semi-minor axis b must be positive");
        return;
      }
      if (!positive_finite(s.f)) invalid("focus coordinate f must be positive");
      if (hyperbolic && s.f >= 1.0) throw Error(ErrorKind::ImproperFocus, "hyperbolic foci need 0 < f < 1");
      if (elliptic && s.a >= std::numbers::pi / 2) invalid("elliptic semimajor axis must be below pi/2");
      return;
    case Family::Parabola:
      if (!positive_finite(s.p)) invalid("focus ordinate p must be positive");
      if (hyperbolic && s.p >= 1.0) throw Error(ErrorKind::ImproperFocus, "hyperbolic parabola focus needs 0 < p < 1");
      return;
  }
}

Mat3 QuadraticForm::matrix() const {
  return {{{F, D / 2, E / 2}, {D / 2, A, B / 2}, {E / 2, B / 2, C}}};
}

QuadraticForm QuadraticForm::normalized() const {
  const double m = std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(D), std::abs(E), std::abs(F)});
  if (m == 0.0) throw Error(ErrorKind::DegenerateConic, "quadratic form has no nonzero coefficient");
  return {A / m, B / m, C / m, D / m, E / m, F / m};
}

BivariatePolynomial QuadraticForm::polynomial() const {
  BivariatePolynomial p;
  p.set_coeff(2, 0, A);
  p.set_coeff(1, 1, B);
  p.set_coeff(0, 2, C);
  p.set_coeff(1, 0, D);
  p.set_coeff(0, 1, E);
  p.set_coeff(0, 0, F);
  return p;
}

bool QuadraticForm::equivalent(const QuadraticForm& o, double rel_tol) const {
  const std::array<double, 6> u{A, B, C, D, E, F}, v{o.A, o.B, o.C, o.D, o.E, o.F};
  // Parallel 6-vectors: |u|^2 |v|^2 - (u.v)^2 vanishes.
  double uu = 0, vv = 0, uv = 0;
  for (int i = 0; i < 6; ++i) {
    uu += u[i] * u[i];
    vv += v[i] * v[i];
    uv += u[i] * v[i];
  }
  return uu * vv - uv * uv <= rel_tol * uu * vv;
}

ModelShape model_shape(const QuadraticForm& q) {
  if (std::abs(determinant(q.matrix())) <= kDegeneracyTolerance * std::pow(std::max({std::abs(q.A), std::abs(q.B),
                                                                                    std::abs(q.C), std::abs(q.D),
                                                                                    std::abs(q.E), std::abs(q.F)}),
                                                                           3))
    return ModelShape::Degenerate;
  const double disc = q.B * q.B - 4 * q.A * q.C;
  const double scale = q.B * q.B + 4 * std::abs(q.A * q.C);
  if (std::abs(disc) <= kDegeneracyTolerance * scale) return ModelShape::Parabola;
  return disc < 0 ? ModelShape::Ellipse : ModelShape::Hyperbola;
}

CentralType classify_central(const ConicSpec& s) {
  if (s.family != Family::CentralConic) invalid("classify_central needs a central conic");
  validate(s);
  double sign_term = 0;
  switch (s.geometry) {
    case GeometryKind::Euclidean:
      return s.euclidean_type;
    case GeometryKind::Hyperbolic: {
      const double ch = std::cosh(s.a);
      sign_term = 1.0 + 1.0 / (ch * ch * (s.f * s.f - 1.0));
      break;
    }
    case GeometryKind::Elliptic: {
      const double c = std::cos(s.a);
      sign_term = 1.0 / (c * c * (1.0 + s.f * s.f)) - 1.0;
      break;
    }
  }
  if (std::abs(sign_term) < kDegeneracyTolerance)
    throw Error(ErrorKind::DegenerateConic, "2a equals the focal distance: the conic degenerates to a segment");
  return sign_term > 0 ? CentralType::Ellipse : CentralType::Hyperbola;
}

QuadraticForm central_conic_form(const ConicSpec& s) {
  if (s.family != Family::CentralConic) invalid("central_conic_form needs a central conic");
  validate(s);
  switch (s.geometry) {
    case GeometryKind::Euclidean: {
      const double sign = s.euclidean_type == CentralType::Ellipse ? 1.0 : -1.0;
      return {.A = 1.0 / (s.a * s.a), .C = sign / (s.b * s.b), .F = -1.0};
    }
    case GeometryKind::Hyperbolic: {
      const double t = std::tanh(s.a), ch = std::cosh(s.a);
      const double y_den = 1.0 + 1.0 / ((s.f * s.f - 1.0) * ch * ch);
      if (std::abs(y_den) < kDegeneracyTolerance) throw Error(ErrorKind::DegenerateConic, "degenerate central conic");
      return {.A = 1.0 / (t * t), .C = 1.0 / y_den, .F = -1.0};
    }
    case GeometryKind::Elliptic: {
      const double t = std::tan(s.a), c = std::cos(s.a);
      const double y_den = 1.0 / ((1.0 + s.f * s.f) * c * c) - 1.0;
      if (std::abs(y_den) < kDegeneracyTolerance) throw Error(ErrorKind::DegenerateConic, "degenerate central conic");
      return {.A = 1.0 / (t * t), .C = 1.0 / y_den, .F = -1.0};
    }
  }
  invalid("unknown geometry");
}

QuadraticForm parabola_form(const ConicSpec& s) {
  if (s.family != Family::Parabola) invalid("parabola_form needs a parabola");
  validate(s);
  const double p = s.p;
  switch (s.geometry) {
    case GeometryKind::Euclidean:
      // |PF| = distance to the x axis:  x^2 + (y - p)^2 = y^2.
      return {.A = 1.0, .E = -2.0 * p, .F = p * p};
    case GeometryKind::Hyperbolic:
      // x^2 + (1 - p y)^2 / (1 - p^2) = 1, scaled by (1 - p^2).
      return {.A = 1.0 - p * p, .C = p * p, .E = -2.0 * p, .F = p * p};
    case GeometryKind::Elliptic:
      // -x^2 + (1 + p y)^2 / (1 + p^2) = 1, scaled by (1 + p^2).
      return {.A = -(1.0 + p * p), .C = p * p, .E = 2.0 * p, .F = -p * p};
  }
  invalid("unknown geometry");
}

QuadraticForm conic_form(const ConicSpec& s) {
  switch (s.family) {
    case Family::CentralConic: return central_conic_form(s);
    case Family::Parabola: return parabola_form(s);
    case Family::Segment: break;
  }
  invalid("segments have no quadratic form");
}

double implicit_value(const QuadraticForm& q, const HomogeneousPoint& p) {
  const auto xy = p.affine();
  if (!xy) throw Error(ErrorKind::IdealPoint, "implicit value needs a point of the affine chart");
  return q(xy->first, xy->second);
}

ProjectiveLine tangent_at(const QuadraticForm& q, const HomogeneousPoint& p) {
  const QuadraticForm n = q.normalized();
  if (std::abs(implicit_value(n, p)) > kOnCurveTolerance)
    throw Error(ErrorKind::NotOnCurve, "tangent_at needs a point on the conic");
  const Mat3 m = n.matrix();
  const Vec3 l = m * p.coords();
  if (norm(l) <= 1e-12 * norm(p.coords())) throw Error(ErrorKind::SingularPoint, "singular point of a degenerate conic");
  return ProjectiveLine(l);
}

std::pair<HomogeneousPoint, HomogeneousPoint> segment_endpoints(const ConicSpec& s) {
  if (s.family != Family::Segment) invalid("segment_endpoints needs a segment");
  validate(s);
  return {HomogeneousPoint(1.0, s.a, 0.0), HomogeneousPoint(1.0, -s.a, 0.0)};
}

std::vector<HomogeneousPoint> focal_points(const ConicSpec& s) {
  validate(s);
  switch (s.family) {
    case Family::Segment: {
      auto [a, b] = segment_endpoints(s);
      return {a, b};
    }
    case Family::Parabola:
      return {HomogeneousPoint(1.0, 0.0, s.p)};
    case Family::CentralConic:
      if (s.geometry != GeometryKind::Euclidean) return {chart_point(s.f, 0.0), chart_point(-s.f, 0.0)};
      if (s.euclidean_type == CentralType::Hyperbola) {
        const double c = std::hypot(s.a, s.b);
        return {chart_point(c, 0.0), chart_point(-c, 0.0)};
      }
      if (s.a >= s.b) {
        const double c = std::sqrt(s.a * s.a - s.b * s.b);
        return {chart_point(c, 0.0), chart_point(-c, 0.0)};
      } else {
        const double c = std::sqrt(s.b * s.b - s.a * s.a);
        return {chart_point(0.0, c), chart_point(0.0, -c)};
      }
  }
  return {};
}

}  // namespace isoptic
