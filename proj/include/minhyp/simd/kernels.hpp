#pragma once

#include <cstddef>
#include <string_view>

namespace minhyp::simd {

enum class Isa { scalar, avx2 };

/// Reductions over per-sample arrays of the numeric grid layer. Every
/// variant performs the same per-element operations in the same order, so
/// results are bit-identical across ISAs. A NaN anywhere yields NaN.
struct Kernels {
  Isa isa;
  /// max_i |a x[i] + b y[i] + c z[i]|
  double (*max_abs_lincomb3)(const double* x, const double* y, const double* z, double a, double b, double c,
                             std::size_t n);
  /// max_i |x[i] - y[i]| / scale[i]
  double (*max_scaled_deviation)(const double* x, const double* y, const double* scale, std::size_t n);
  /// max_i |sum_k eta[k] coords[k][i]^2 - target| for `dim` coordinate arrays.
  double (*max_quadric_residual)(const double* const* coords, const double* eta, std::size_t dim, double target,
                                 std::size_t n);
};

const Kernels& scalar_kernels();
bool avx2_available();
/// Throws std::runtime_error if the ISA was not compiled in or the CPU lacks it.
const Kernels& kernels_for(Isa isa);
/// Best available ISA, unless MINHYP_SIMD=scalar is set in the environment.
const Kernels& kernels();
std::string_view isa_name(Isa isa);

namespace detail {
#ifdef MINHYP_HAVE_AVX2
const Kernels& avx2_kernels();
#endif
}  // namespace detail

}  // namespace minhyp::simd
