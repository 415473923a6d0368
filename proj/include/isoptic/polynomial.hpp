#pragma once

#include <array>
#include <cstddef>

namespace isoptic {

/// Real polynomial in (x, y) of total degree at most 4, stored densely as the
/// coefficient of x^i y^j at (i, j).
class BivariatePolynomial {
 public:
  static constexpr int kMaxDegree = 4;
  using Row = std::array<double, kMaxDegree + 1>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(double c);
  static BivariatePolynomial x();
  static BivariatePolynomial y();

  double coeff(int i, int j) const { return a_[i][j]; }
  void set_coeff(int i, int j, double value);

  /// Highest total degree with a nonzero coefficient, -1 for the zero polynomial.
  int degree() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(double s);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a) { return a *= -1.0; }
  friend BivariatePolynomial operator*(double s, BivariatePolynomial a) { return a *= s; }
  friend BivariatePolynomial operator+(BivariatePolynomial a, double c) { return a += constant(c); }
  friend BivariatePolynomial operator+(double c, BivariatePolynomial a) { return a += constant(c); }
  friend BivariatePolynomial operator-(BivariatePolynomial a, double c) { return a -= constant(c); }
  friend BivariatePolynomial operator-(double c, const BivariatePolynomial& a) { return constant(c) - a; }
  /// Throws std::domain_error when the product would exceed kMaxDegree.
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

  /// Coefficients of the univariate polynomial in x obtained by fixing y.
  Row row_coefficients(double y) const;

  double operator()(double x, double y) const { return horner(row_coefficients(y), x); }

  /// ((c4 x + c3) x + c2) x + c1) x + c0, evaluated without contraction so that
  /// vector kernels can reproduce it exactly.
  static double horner(const Row& c, double x) {
    double acc = c[kMaxDegree];
    for (int i = kMaxDegree - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }

 private:
  std::array<Row, kMaxDegree + 1> a_{};
};

}  // namespace isoptic
