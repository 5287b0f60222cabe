#include <immintrin.h>

#include <cmath>
#include <limits>

#include "minhyp/simd/kernels.hpp"

namespace minhyp::simd::detail {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

// Horizontal max of four lanes; NaN lanes were tracked separately.
inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_pd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

struct Acc {
  __m256d max = _mm256_setzero_pd();
  __m256d nan = _mm256_setzero_pd();
  void add(__m256d t) {
    nan = _mm256_or_pd(nan, _mm256_cmp_pd(t, t, _CMP_UNORD_Q));
    max = _mm256_max_pd(t, max);
  }
  bool any_nan() const { return _mm256_movemask_pd(nan) != 0; }
};

double max_abs_lincomb3(const double* x, const double* y, const double* z, double a, double b, double c,
                        std::size_t n) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b), vc = _mm256_set1_pd(c);
  Acc acc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    t = _mm256_add_pd(t, _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
    t = _mm256_add_pd(t, _mm256_mul_pd(vc, _mm256_loadu_pd(z + i)));
    acc.add(vabs(t));
  }
  double m = hmax(acc.max);
  bool nan = acc.any_nan();
  for (; i < n; ++i) {
    double t = a * x[i];
    t = t + b * y[i];
    t = t + c * z[i];
    t = std::fabs(t);
    nan |= std::isnan(t);
    m = t > m ? t : m;
  }
  return nan ? kNaN : m;
}

double max_scaled_deviation(const double* x, const double* y, const double* scale, std::size_t n) {
  Acc acc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = vabs(_mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    acc.add(_mm256_div_pd(d, _mm256_loadu_pd(scale + i)));
  }
  double m = hmax(acc.max);
  bool nan = acc.any_nan();
  for (; i < n; ++i) {
    double t = std::fabs(x[i] - y[i]) / scale[i];
    nan |= std::isnan(t);
    m = t > m ? t : m;
  }
  return nan ? kNaN : m;
}

double max_quadric_residual(const double* const* coords, const double* eta, std::size_t dim, double target,
                            std::size_t n) {
  const __m256d vt = _mm256_set1_pd(target);
  Acc acc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_setzero_pd();
    for (std::size_t k = 0; k < dim; ++k) {
      __m256d p = _mm256_loadu_pd(coords[k] + i);
      s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(eta[k]), p), p));
    }
    acc.add(vabs(_mm256_sub_pd(s, vt)));
  }
  double m = hmax(acc.max);
  bool nan = acc.any_nan();
  for (; i < n; ++i) {
    double s = 0;
    for (std::size_t k = 0; k < dim; ++k) s = s + (eta[k] * coords[k][i]) * coords[k][i];
    double t = std::fabs(s - target);
    nan |= std::isnan(t);
    m = t > m ? t : m;
  }
  return nan ? kNaN : m;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{Isa::avx2, max_abs_lincomb3, max_scaled_deviation, max_quadric_residual};
  return k;
}

}  // namespace minhyp::simd::detail
