#include <cstdlib>
#include <stdexcept>
#include <string>

#include "minhyp/simd/kernels.hpp"

namespace minhyp::simd {

bool avx2_available() {
#if defined(MINHYP_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

const Kernels& kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return scalar_kernels();
    case Isa::avx2:
#ifdef MINHYP_HAVE_AVX2
      if (avx2_available()) return detail::avx2_kernels();
#endif
      throw std::runtime_error("AVX2 kernels are not available on this build or CPU");
  }
  throw std::invalid_argument("unknown ISA");
}

const Kernels& kernels() {
  static const Kernels& active = [&]() -> const Kernels& {
    const char* env = std::getenv("MINHYP_SIMD");
    if (env && std::string(env) == "scalar") return scalar_kernels();
    return avx2_available() ? kernels_for(Isa::avx2) : scalar_kernels();
  }();
  return active;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace minhyp::simd
