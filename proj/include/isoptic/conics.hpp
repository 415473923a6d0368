#pragma once

#include <utility>
#include <vector>

#include "isoptic/geometry_kernel.hpp"
#include "isoptic/polynomial.hpp"

namespace isoptic {

enum class Family { Segment, CentralConic, Parabola };

enum class CentralType { Ellipse, Hyperbola };

const char* to_string(Family f) noexcept;
const char* to_string(CentralType t) noexcept;

/// A curve placed in canonical position: segments and central conics are
/// symmetric about both axes with foci/endpoints on the x axis; parabolas have
/// the x axis as directrix and the focus at (0, p).
struct ConicSpec {
  GeometryKind geometry = GeometryKind::Euclidean;
  Family family = Family::CentralConic;
  double a = 0.0;  // semimajor axis (geodesic length) or segment half-width
  double f = 0.0;  // focus abscissa, non-Euclidean central conics
  double p = 0.0;  // focus ordinate, parabolas
  double b = 0.0;  // semi-minor axis, Euclidean central conics
  // Euclidean central conics are given by their standard form and need the
  // type spelled out; elsewhere the type follows from (a, f).
  CentralType euclidean_type = CentralType::Ellipse;
};

/// Throws Error(Validation / ImproperFocus) when the parameters leave the
/// admissible range of the family.
void validate(const ConicSpec& spec);

/// A x^2 + B xy + C y^2 + D x + E y + F = 0 in the chart x0 = 1.
struct QuadraticForm {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

  /// Symmetric matrix acting on (x0, x1, x2).
  Mat3 matrix() const;
  /// Scaled so that the largest coefficient magnitude is 1.
  QuadraticForm normalized() const;
  double operator()(double x, double y) const { return A * x * x + B * x * y + C * y * y + D * x + E * y + F; }
  BivariatePolynomial polynomial() const;

  bool equivalent(const QuadraticForm& other, double rel_tol = 1e-12) const;
  bool operator==(const QuadraticForm& other) const { return equivalent(other); }
};

enum class ModelShape { Ellipse, Hyperbola, Parabola, Degenerate };

/// Affine type of the chart curve from the quadratic part's discriminant.
ModelShape model_shape(const QuadraticForm& q);

QuadraticForm central_conic_form(const ConicSpec& spec);
QuadraticForm parabola_form(const ConicSpec& spec);
/// Dispatches on the family; segments have no quadratic form.
QuadraticForm conic_form(const ConicSpec& spec);

/// Ellipse iff 2a exceeds the focal distance. Euclidean specs report their
/// declared type.
CentralType classify_central(const ConicSpec& spec);

inline constexpr double kDegeneracyTolerance = 1e-12;
inline constexpr double kOnCurveTolerance = 1e-9;

double implicit_value(const QuadraticForm& q, const HomogeneousPoint& p);

/// Projective tangent at an on-curve point: the polar of P with respect to q.
ProjectiveLine tangent_at(const QuadraticForm& q, const HomogeneousPoint& p);

/// Segment endpoints (1, a, 0) and (1, -a, 0).
std::pair<HomogeneousPoint, HomogeneousPoint> segment_endpoints(const ConicSpec& spec);

/// Foci of central conics and parabolas, endpoints of segments.
std::vector<HomogeneousPoint> focal_points(const ConicSpec& spec);

}  // namespace isoptic
