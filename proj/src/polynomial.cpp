#include "isoptic/polynomial.hpp"

#include <stdexcept>

namespace isoptic {

BivariatePolynomial BivariatePolynomial::constant(double c) {
  BivariatePolynomial p;
  p.a_[0][0] = c;
  return p;
}

BivariatePolynomial BivariatePolynomial::x() {
  BivariatePolynomial p;
  p.a_[1][0] = 1.0;
  return p;
}

BivariatePolynomial BivariatePolynomial::y() {
  BivariatePolynomial p;
  p.a_[0][1] = 1.0;
  return p;
}

void BivariatePolynomial::set_coeff(int i, int j, double value) {
  if (i < 0 || j < 0 || i + j > kMaxDegree) throw std::domain_error("monomial degree out of range");
  a_[i][j] = value;
}

int BivariatePolynomial::degree() const {
  int d = -1;
  for (int i = 0; i <= kMaxDegree; ++i)
    for (int j = 0; i + j <= kMaxDegree; ++j)
      if (a_[i][j] != 0.0 && i + j > d) d = i + j;
  return d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (int i = 0; i <= kMaxDegree; ++i)
    for (int j = 0; j <= kMaxDegree; ++j) a_[i][j] += o.a_[i][j];
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (int i = 0; i <= kMaxDegree; ++i)
    for (int j = 0; j <= kMaxDegree; ++j) a_[i][j] -= o.a_[i][j];
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(double s) {
  for (auto& row : a_)
    for (double& c : row) c *= s;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.degree() + b.degree() > BivariatePolynomial::kMaxDegree)
    throw std::domain_error("polynomial product exceeds the supported degree");
  BivariatePolynomial r;
  constexpr int n = BivariatePolynomial::kMaxDegree;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (a.a_[i][j] == 0.0) continue;
      for (int k = 0; i + k <= n; ++k)
        for (int l = 0; i + j + k + l <= n; ++l) r.a_[i + k][j + l] += a.a_[i][j] * b.a_[k][l];
    }
  return r;
}

BivariatePolynomial::Row BivariatePolynomial::row_coefficients(double y) const {
  Row out{};
  for (int i = 0; i <= kMaxDegree; ++i) {
    double acc = a_[i][kMaxDegree];
    for (int j = kMaxDegree - 1; j >= 0; --j) acc = acc * y + a_[i][j];
    out[i] = acc;
  }
  return out;
}

}  // namespace isoptic
