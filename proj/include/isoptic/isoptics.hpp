#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isoptic/conics.hpp"
#include "isoptic/kernels.hpp"

namespace isoptic {

struct IsopticQuery {
  ConicSpec conic;
  double alpha = 0.0;  // radians, 0 < alpha < pi
};

void validate(const IsopticQuery& query);

/// Closed form of a family: the curve is seen under angle theta from (x, y)
/// where cos(theta) = N / sqrt(D). Squared families only determine cos^2 and
/// describe the alpha and (pi - alpha) isoptics together.
struct IsopticPolynomials {
  BivariatePolynomial numerator;
  BivariatePolynomial denominator;
  bool squared = false;
};

IsopticPolynomials isoptic_polynomials(const ConicSpec& spec);
bool is_squared_family(const ConicSpec& spec);

/// Polynomial that is negative exactly on the exterior of the curve (where
/// two tangents exist). Constant -1 for segments.
BivariatePolynomial exterior_polynomial(const ConicSpec& spec);

/// Normalised residual of the family's isoptic equation at P:
///   (N - cos(alpha) sqrt(D)) / (|N| + sqrt(D))      or
///   (N^2 - cos^2(alpha) D) / (N^2 + D)              for squared families.
/// Zero exactly on the isoptic.
double isoptic_residual(const IsopticQuery& query, const HomogeneousPoint& p);

/// Hyperbolic tracing domain: the open model disk shrunk by this margin.
inline constexpr double kDiskMaskRadius = 1.0 - 1e-6;

/// Residual programs whose zero sets together form the isoptic. One program
/// for plain families; for squared families the two sign-definite factors
/// N - |cos| sqrt(D) and N + |cos| sqrt(D) (one when cos(alpha) == 0).
std::vector<kernels::ResidualProgram> tracing_programs(const IsopticQuery& query);

/// The squared (or plain) residual as a single program, matching isoptic_residual.
kernels::ResidualProgram residual_program(const IsopticQuery& query);

struct NotExists {
  std::string reason;
};

struct OrthopticLines {
  std::vector<ProjectiveLine> lines;
};

using Orthoptic = std::variant<QuadraticForm, OrthopticLines, NotExists>;

Orthoptic orthoptic_curve(const ConicSpec& spec);

struct ExistenceVerdict {
  bool exists = true;
  std::optional<std::pair<double, double>> forbidden_interval;
  std::string condition_note;
};

ExistenceVerdict existence_verdict(const IsopticQuery& query);

/// Isoptic of the hyperbolic segment as its endpoints reach the absolute:
/// x^2 + (y / cos(alpha/2))^2 = 1.
QuadraticForm limit_segment_curve(double alpha);

}  // namespace isoptic

namespace isoptic {

/// |view_angle(P) - alpha| with the raw convention; for squared families the
/// smaller deviation from alpha and pi - alpha.
double oracle_deviation(const IsopticQuery& query, double x, double y);

}  // namespace isoptic
