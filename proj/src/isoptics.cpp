#include "isoptic/isoptics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "isoptic/tangents.hpp"

namespace isoptic {

namespace {

using Poly = BivariatePolynomial;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const Poly X = Poly::x();
const Poly Y = Poly::y();

Poly sq(const Poly& p) { return p * p; }

IsopticPolynomials euclidean_family(const ConicSpec& s) {
  const double a2 = s.a * s.a, b2 = s.b * s.b, p = s.p;
  switch (s.family) {
    case Family::Segment:
      // Angle APB between the rays to the endpoints.
      return {X * X + Y * Y - a2, (sq(X - s.a) + Y * Y) * (sq(X + s.a) + Y * Y), false};
    case Family::CentralConic:
      if (s.euclidean_type == CentralType::Ellipse)
        return {-(a2 + b2 - X * X - Y * Y), sq(-a2 + b2 + X * X) + 2.0 * (Y * Y) * (a2 - b2 + X * X) + sq(Y * Y),
                false};
      return {-a2 + b2 + X * X + Y * Y, sq(a2 + b2 - X * X) + 2.0 * (Y * Y) * (a2 + b2 + X * X) + sq(Y * Y), true};
    case Family::Parabola:
      return {-Y, sq(p - Y) + X * X, false};
  }
  invalid("unknown family");
}

IsopticPolynomials segment_family(const ConicSpec& s, double eps) {
  // Lines through P and the endpoints (1, +-a, 0), measured with the absolute's
  // dual form and cleared of the y^2 a^2 denominators.
  const double a = s.a, a2 = a * a;
  const Poly num = eps * (eps * a2 * (Y * Y) - Y * Y + a2 - X * X);
  const Poly den = (eps * a2 * (Y * Y) + Y * Y + sq(a - X)) * (eps * a2 * (Y * Y) + Y * Y + sq(a + X));
  // In the elliptic plane the dual-form cosine is that of the supplementary
  // angle: flip it so the zero set is the locus seen under alpha.
  return {eps > 0 ? -num : num, den, false};
}

IsopticPolynomials hyperbolic_family(const ConicSpec& s) {
  switch (s.family) {
    case Family::Segment:
      return segment_family(s, -1.0);
    case Family::CentralConic: {
      const double f2 = s.f * s.f, g = f2 - 1.0, ch = std::cosh(2.0 * s.a);
      return {g * ch * (X * X + Y * Y - 1.0) + f2 * (X * X) - 1.0,
              -2.0 * g * (Y * Y) * (f2 + X * X) + sq(f2 - X * X) + (g * g) * sq(Y * Y), true};
    }
    case Family::Parabola: {
      const double p = s.p;
      const Poly one_minus_x2 = 1.0 - X * X;
      return {Y * (p * Y - 1.0), one_minus_x2 * ((p * p) * one_minus_x2 - 2.0 * p * Y + Y * Y + X * X), false};
    }
  }
  invalid("unknown family");
}

IsopticPolynomials elliptic_family(const ConicSpec& s) {
  switch (s.family) {
    case Family::Segment:
      return segment_family(s, 1.0);
    case Family::CentralConic: {
      const double f2 = s.f * s.f, h = 1.0 + f2, c2 = std::cos(2.0 * s.a);
      return {h * c2 * (X * X + Y * Y + 1.0) + f2 * (X * X) - 1.0,
              2.0 * h * (Y * Y) * (f2 + X * X) + sq(f2 - X * X) + (h * h) * sq(Y * Y), true};
    }
    case Family::Parabola: {
      const double p = s.p;
      const Poly one_plus_x2 = 1.0 + X * X;
      // Supplementary-angle flip as for elliptic segments.
      return {-(Y * (p * Y + 1.0)), one_plus_x2 * ((p * p) * one_plus_x2 - 2.0 * p * Y + Y * Y + X * X), false};
    }
  }
  invalid("unknown family");
}

}  // namespace

void validate(const IsopticQuery& q) {
  validate(q.conic);
  if (!(q.alpha > 0.0 && q.alpha < std::numbers::pi)) invalid("alpha must lie in (0, pi)");
}

IsopticPolynomials isoptic_polynomials(const ConicSpec& s) {
  validate(s);
  switch (s.geometry) {
    case GeometryKind::Euclidean: return euclidean_family(s);
    case GeometryKind::Hyperbolic: return hyperbolic_family(s);
    case GeometryKind::Elliptic: return elliptic_family(s);
  }
  invalid("unknown geometry");
}

bool is_squared_family(const ConicSpec& s) {
  return s.family == Family::CentralConic &&
         (s.geometry != GeometryKind::Euclidean || s.euclidean_type == CentralType::Hyperbola);
}

BivariatePolynomial exterior_polynomial(const ConicSpec& s) {
  if (s.family == Family::Segment) return Poly::constant(-1.0);
  // K is exterior iff det(M) * K^T M K < 0 (its polar meets the conic twice).
  const QuadraticForm q = conic_form(s).normalized();
  const double det = determinant(q.matrix());
  if (det == 0.0) throw Error(ErrorKind::DegenerateConic, "degenerate conic has no exterior");
  return (det > 0 ? 1.0 : -1.0) * q.polynomial();
}

namespace {

double disk_radius_sq(const ConicSpec& s) {
  return s.geometry == GeometryKind::Hyperbolic ? kDiskMaskRadius * kDiskMaskRadius
                                                : std::numeric_limits<double>::infinity();
}

}  // namespace

kernels::ResidualProgram residual_program(const IsopticQuery& q) {
  validate(q);
  const IsopticPolynomials fam = isoptic_polynomials(q.conic);
  return {.numerator = fam.numerator,
          .denominator = fam.denominator,
          .exterior = exterior_polynomial(q.conic),
          .cos_alpha = std::cos(q.alpha),
          .squared = fam.squared,
          .disk_radius_sq = disk_radius_sq(q.conic)};
}

std::vector<kernels::ResidualProgram> tracing_programs(const IsopticQuery& q) {
  kernels::ResidualProgram base = residual_program(q);
  if (!base.squared) return {base};
  base.squared = false;
  const double c = std::abs(base.cos_alpha);
  // cos(pi/2) is not exactly zero in floating point; both factors coincide there.
  if (c < 1e-15) {
    base.cos_alpha = 0.0;
    return {base};
  }
  kernels::ResidualProgram minus = base, plus = base;
  minus.cos_alpha = c;
  plus.cos_alpha = -c;
  return {minus, plus};
}

double isoptic_residual(const IsopticQuery& q, const HomogeneousPoint& p) {
  validate(q);
  const auto xy = p.affine();
  if (!xy) throw Error(ErrorKind::IdealPoint, "residual needs a point of the affine chart");
  const auto [x, y] = *xy;
  if (q.conic.geometry == GeometryKind::Hyperbolic && x * x + y * y >= 1.0)
    throw Error(ErrorKind::Domain, "point outside the hyperbolic model disk");

  if (q.conic.family == Family::Segment) {
    if (std::abs(y) <= 1e-15 && std::abs(x) <= q.conic.a) throw Error(ErrorKind::OnCurve, "point on the segment");
  } else {
    const QuadraticForm form = conic_form(q.conic).normalized();
    if (std::abs(form(x, y)) <= kOnCurveTolerance) throw Error(ErrorKind::OnCurve, "point on the conic");
    if (exterior_polynomial(q.conic)(x, y) >= 0.0) throw Error(ErrorKind::Domain, "point inside the conic");
  }

  const kernels::ResidualProgram program = residual_program(q);
  const double n = program.numerator(x, y), d = program.denominator(x, y);
  if (!(d > 0.0)) throw Error(ErrorKind::OnCurve, "isoptic denominator vanishes");
  if (program.squared) return (n * n - program.cos_alpha * program.cos_alpha * d) / (n * n + d);
  const double s = std::sqrt(d);
  return (n - program.cos_alpha * s) / (std::abs(n) + s);
}

Orthoptic orthoptic_curve(const ConicSpec& s) {
  validate(s);
  const double a = s.a, a2 = a * a;
  switch (s.geometry) {
    case GeometryKind::Euclidean:
      switch (s.family) {
        case Family::Segment:
          return QuadraticForm{.A = 1, .C = 1, .F = -a2};
        case Family::Parabola:
          return OrthopticLines{{ProjectiveLine(0, 0, 1)}};
        case Family::CentralConic:
          if (s.euclidean_type == CentralType::Ellipse) return QuadraticForm{.A = 1, .C = 1, .F = -(a2 + s.b * s.b)};
          if (s.a > s.b) return QuadraticForm{.A = 1, .C = 1, .F = -(a2 - s.b * s.b)};
          return NotExists{"orthoptic of a Euclidean hyperbola needs a > b"};
      }
      break;
    case GeometryKind::Hyperbolic:
      switch (s.family) {
        case Family::Segment:
          return QuadraticForm{.A = 1, .C = 1 + a2, .F = -a2};
        case Family::Parabola:
          return OrthopticLines{{ProjectiveLine(0, 0, 1), ProjectiveLine(-1, 0, s.p)}};
        case Family::CentralConic: {
          const double f2 = s.f * s.f, k = (1 - f2) * std::cosh(2 * a);
          // (1 - f^2) cosh(2a) (1 - x^2 - y^2) + f^2 x^2 = 1
          if (k < 1.0) return NotExists{"orthoptic needs f <= sqrt(1 - 1/cosh(2a))"};
          return QuadraticForm{.A = f2 - k, .C = -k, .F = k - 1};
        }
      }
      break;
    case GeometryKind::Elliptic:
      switch (s.family) {
        case Family::Segment:
          return QuadraticForm{.A = 1, .C = 1 - a2, .F = -a2};
        case Family::Parabola:
          return OrthopticLines{{ProjectiveLine(0, 0, 1), ProjectiveLine(1, 0, s.p)}};
        case Family::CentralConic: {
          const double f2 = s.f * s.f, k = (1 + f2) * std::cos(2 * a);
          // (1 + f^2) cos(2a) (x^2 + y^2 + 1) + f^2 x^2 = 1
          const double A = k + f2, C = k, rhs = 1 - k;
          const bool has_points = rhs > 0 ? (A > 0 || C > 0) : rhs < 0 ? (A < 0 || C < 0) : true;
          if (!has_points) return NotExists{"orthoptic quadratic has no real points"};
          return QuadraticForm{.A = A, .C = C, .F = -rhs};
        }
      }
      break;
  }
  invalid("unknown family");
}

ExistenceVerdict existence_verdict(const IsopticQuery& q) {
  validate(q);
  const ConicSpec& s = q.conic;
  const double alpha = q.alpha;
  auto with_interval = [&](double lo, double hi, std::string note) {
    ExistenceVerdict v;
    v.forbidden_interval = std::pair{lo, hi};
    v.exists = !(alpha > lo && alpha < hi);
    v.condition_note = std::move(note);
    return v;
  };

  if (s.family == Family::CentralConic) {
    const double f2 = s.f * s.f;
    switch (s.geometry) {
      case GeometryKind::Euclidean:
        if (s.euclidean_type == CentralType::Hyperbola && s.b > s.a) {
          const double a2 = s.a * s.a, b2 = s.b * s.b;
          return with_interval(std::acos((b2 - a2) / (b2 + a2)), std::acos((a2 - b2) / (a2 + b2)),
                               "hyperbola with b > a: the numerator never vanishes in the interval");
        }
        break;
      case GeometryKind::Hyperbolic: {
        const double ch = std::cosh(s.a), ch2 = std::cosh(2 * s.a);
        if ((1 / (1 - f2) + 1) / (ch * ch) > 2) {
          // Holds only for the hyperbola class (no orthoptic).
          return with_interval(std::acos(((f2 - 1) * ch2 + 1) / f2), std::acos(((1 - f2) * ch2 - 1) / f2),
                               "(1/(1-f^2)+1) sech^2(a) > 2 (hyperbola class)");
        }
        break;
      }
      case GeometryKind::Elliptic: {
        if (classify_central(s) != CentralType::Hyperbola) break;
        const double k = (1 + f2) * std::cos(2 * s.a);
        const double bound = std::max((1 - k) / f2, f2 + k);
        const double lo = std::acos((k - 1) / f2), hi = std::acos((1 - k) / f2);
        const bool interval_nonempty = lo < hi;  // false also when either acos is NaN
        const bool in_interval = interval_nonempty && alpha > lo && alpha < hi;
        const bool second = s.a >= std::numbers::pi / 6 || s.f <= std::sqrt(1 / std::cos(2 * s.a) - 1) || !in_interval;
        ExistenceVerdict v;
        v.exists = std::cos(alpha) <= bound && second;
        if (interval_nonempty) v.forbidden_interval = std::pair{lo, hi};
        v.condition_note =
            "elliptic hyperbola: closed-form condition given without derivation "
            "(cos alpha <= max(...) and (a >= pi/6 or f <= sqrt(1/cos 2a - 1) or alpha not in I))";
        return v;
      }
    }
  }
  ExistenceVerdict v;
  v.exists = true;
  v.condition_note = s.geometry == GeometryKind::Elliptic
                         ? "no closed-form restriction; very small angles may be unattainable (elliptic distances "
                           "are bounded by pi/2)"
                         : "exists for every alpha in (0, pi)";
  return v;
}

QuadraticForm limit_segment_curve(double alpha) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi)) invalid("alpha must lie in (0, pi)");
  const double c = std::cos(alpha / 2);
  return {.A = 1, .C = 1 / (c * c), .F = -1};
}

double oracle_deviation(const IsopticQuery& q, double x, double y) {
  const double theta = view_angle(q.conic, chart_point(x, y), AngleConvention::Raw);
  const double d = std::abs(theta - q.alpha);
  if (!is_squared_family(q.conic)) return d;
  return std::min(d, std::abs(theta - (std::numbers::pi - q.alpha)));
}

}  // namespace isoptic
