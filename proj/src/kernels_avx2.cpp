// Compiled with -mavx2 and -ffp-contract=off so every lane rounds exactly like
// the scalar reference.

#include <immintrin.h>

#include <limits>

#include "isoptic/kernels.hpp"

namespace isoptic::kernels::detail {

namespace {

inline __m256d horner(const BivariatePolynomial::Row& c, __m256d x) {
  __m256d acc = _mm256_set1_pd(c[BivariatePolynomial::kMaxDegree]);
  for (int i = BivariatePolynomial::kMaxDegree - 1; i >= 0; --i)
    acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(c[i]));
  return acc;
}

// Residuals at x0 + (first + k) dx, k = 0..3.
inline __m256d residual_block(const RowCoefficients& rc, double x0, double dx, std::size_t first) {
  const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(first)), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
  const __m256d x = _mm256_add_pd(_mm256_set1_pd(x0), _mm256_mul_pd(idx, _mm256_set1_pd(dx)));
  const __m256d num = horner(rc.numerator, x);
  const __m256d den = horner(rc.denominator, x);
  const __m256d ext = horner(rc.exterior, x);
  const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_set1_pd(rc.y_sq));

  __m256d res;
  if (rc.squared) {
    const __m256d n2 = _mm256_mul_pd(num, num);
    res = _mm256_div_pd(_mm256_sub_pd(n2, _mm256_mul_pd(_mm256_set1_pd(rc.cos_sq), den)), _mm256_add_pd(n2, den));
  } else {
    const __m256d s = _mm256_sqrt_pd(den);
    const __m256d abs_num = _mm256_andnot_pd(_mm256_set1_pd(-0.0), num);
    res = _mm256_div_pd(_mm256_sub_pd(num, _mm256_mul_pd(_mm256_set1_pd(rc.cos_alpha), s)),
                        _mm256_add_pd(abs_num, s));
  }
  // Ordered compares are false on NaN, matching the scalar branch.
  const __m256d zero = _mm256_setzero_pd();
  __m256d bad = _mm256_cmp_pd(ext, zero, _CMP_GE_OQ);
  bad = _mm256_or_pd(bad, _mm256_cmp_pd(r2, _mm256_set1_pd(rc.disk_radius_sq), _CMP_GE_OQ));
  bad = _mm256_or_pd(bad, _mm256_cmp_pd(den, zero, _CMP_LT_OQ));
  return _mm256_blendv_pd(res, _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN()), bad);
}

}  // namespace

void evaluate_row_avx2(const RowCoefficients& rc, double x0, double dx, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out.data() + i, residual_block(rc, x0, dx, i));
  if (i < n) {
    alignas(32) double tail[4];
    _mm256_store_pd(tail, residual_block(rc, x0, dx, i));
    for (std::size_t k = 0; i + k < n; ++k) out[i + k] = tail[k];
  }
}

}  // namespace isoptic::kernels::detail
