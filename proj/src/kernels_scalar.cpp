#include <cmath>
#include <limits>
#include <stdexcept>

#include "isoptic/kernels.hpp"

namespace isoptic::kernels {

namespace detail {

RowCoefficients prepare_row(const ResidualProgram& p, double y) {
  return {.numerator = p.numerator.row_coefficients(y),
          .denominator = p.denominator.row_coefficients(y),
          .exterior = p.exterior.row_coefficients(y),
          .y_sq = y * y,
          .cos_alpha = p.cos_alpha,
          .cos_sq = p.cos_alpha * p.cos_alpha,
          .disk_radius_sq = p.disk_radius_sq,
          .squared = p.squared};
}

namespace {

inline double residual_at(const RowCoefficients& rc, double x) {
  const double n = BivariatePolynomial::horner(rc.numerator, x);
  const double d = BivariatePolynomial::horner(rc.denominator, x);
  const double e = BivariatePolynomial::horner(rc.exterior, x);
  const double r2 = x * x + rc.y_sq;
  if (e >= 0.0 || r2 >= rc.disk_radius_sq || d < 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (rc.squared) {
    const double n2 = n * n;
    return (n2 - rc.cos_sq * d) / (n2 + d);
  }
  const double s = std::sqrt(d);
  return (n - rc.cos_alpha * s) / (std::abs(n) + s);
}

}  // namespace

void evaluate_row_scalar(const RowCoefficients& rc, double x0, double dx, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = residual_at(rc, x0 + static_cast<double>(i) * dx);
}

}  // namespace detail

double evaluate(const ResidualProgram& program, double x, double y) {
  double out = 0.0;
  // x0 + 0 * dx == x0 exactly, so this is the same code path as a row.
  detail::evaluate_row_scalar(detail::prepare_row(program, y), x, 0.0, std::span<double>(&out, 1));
  return out;
}

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(ISOPTIC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (isa_supported(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

void evaluate_row(const ResidualProgram& program, double y, double x0, double dx, std::span<double> out, Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("instruction set not available: ") + to_string(isa));
  const auto rc = detail::prepare_row(program, y);
  switch (isa) {
    case Isa::Scalar:
      detail::evaluate_row_scalar(rc, x0, dx, out);
      return;
    case Isa::Avx2:
#if defined(ISOPTIC_HAVE_AVX2)
      detail::evaluate_row_avx2(rc, x0, dx, out);
      return;
#else
      break;
#endif
  }
  throw std::invalid_argument("instruction set not compiled in");
}

}  // namespace isoptic::kernels
