#pragma once

// Grid evaluation of isoptic residuals. A ResidualProgram is the family's
// closed form reduced to polynomials; evaluate() is the scalar reference and
// evaluate_row() runs the same arithmetic on whole grid rows with the widest
// instruction set the CPU offers.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "isoptic/polynomial.hpp"

namespace isoptic::kernels {

struct ResidualProgram {
  BivariatePolynomial numerator;
  BivariatePolynomial denominator;
  // Points with exterior(x, y) >= 0 are inside or on the curve and evaluate to NaN.
  BivariatePolynomial exterior = BivariatePolynomial::constant(-1.0);
  double cos_alpha = 0.0;
  // true:  (N^2 - cos^2 D) / (N^2 + D)
  // false: (N - cos sqrt D) / (|N| + sqrt D)
  bool squared = false;
  // Points with x^2 + y^2 >= disk_radius_sq evaluate to NaN.
  double disk_radius_sq = std::numeric_limits<double>::infinity();
};

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
Isa best_isa() noexcept;
std::vector<Isa> supported_isas();

/// Residual at one point; bit-identical to the row kernels.
double evaluate(const ResidualProgram& program, double x, double y);

/// out[i] = evaluate(program, x0 + i * dx, y). Throws std::invalid_argument for
/// an unsupported instruction set.
void evaluate_row(const ResidualProgram& program, double y, double x0, double dx, std::span<double> out,
                  Isa isa = best_isa());

namespace detail {

// Row-invariant part of a program: polynomial coefficients in x at fixed y.
struct RowCoefficients {
  BivariatePolynomial::Row numerator, denominator, exterior;
  double y_sq, cos_alpha, cos_sq, disk_radius_sq;
  bool squared;
};

RowCoefficients prepare_row(const ResidualProgram& program, double y);
void evaluate_row_scalar(const RowCoefficients& rc, double x0, double dx, std::span<double> out);
void evaluate_row_avx2(const RowCoefficients& rc, double x0, double dx, std::span<double> out);

}  // namespace detail

}  // namespace isoptic::kernels
