#include <cmath>
#include <limits>

#include "minhyp/simd/kernels.hpp"

namespace minhyp::simd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double max_abs_lincomb3(const double* x, const double* y, const double* z, double a, double b, double c,
                        std::size_t n) {
  double m = 0;
  bool nan = false;
  for (std::size_t i = 0; i < n; ++i) {
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
  double m = 0;
  bool nan = false;
  for (std::size_t i = 0; i < n; ++i) {
    double t = std::fabs(x[i] - y[i]) / scale[i];
    nan |= std::isnan(t);
    m = t > m ? t : m;
  }
  return nan ? kNaN : m;
}

double max_quadric_residual(const double* const* coords, const double* eta, std::size_t dim, double target,
                            std::size_t n) {
  double m = 0;
  bool nan = false;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t k = 0; k < dim; ++k) s = s + (eta[k] * coords[k][i]) * coords[k][i];
    double t = std::fabs(s - target);
    nan |= std::isnan(t);
    m = t > m ? t : m;
  }
  return nan ? kNaN : m;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, max_abs_lincomb3, max_scaled_deviation, max_quadric_residual};
  return k;
}

}  // namespace minhyp::simd
