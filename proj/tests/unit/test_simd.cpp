#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "minhyp/simd/kernels.hpp"

using namespace minhyp::simd;

namespace {

struct Data {
  std::vector<double> x, y, z, s;
};

Data sample_data(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-10, 10), pos(0.1, 5);
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    d.x.push_back(u(rng));
    d.y.push_back(u(rng));
    d.z.push_back(u(rng));
    d.s.push_back(pos(rng));
  }
  return d;
}

bool same_bits(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return std::memcmp(&a, &b, sizeof a) == 0;
}

struct Results {
  double lincomb, deviation, quadric;
};

Results run(const Kernels& k, const Data& d) {
  const double* coords[3] = {d.x.data(), d.y.data(), d.z.data()};
  const double eta[3] = {1, -1, 1};
  std::size_t n = d.x.size();
  return {k.max_abs_lincomb3(d.x.data(), d.y.data(), d.z.data(), 1.0, 2.0, -0.5, n),
          k.max_scaled_deviation(d.x.data(), d.y.data(), d.s.data(), n),
          k.max_quadric_residual(coords, eta, 3, 1.0, n)};
}

const std::size_t kSizes[] = {0, 1, 3, 4, 5, 7, 8, 9, 17, 1000, 1003};

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar kernels match a direct loop") {
    const Kernels& k = scalar_kernels();
    for (std::size_t n : kSizes) {
      CAPTURE(n);
      Data d = sample_data(n, n + 1);
      double lc = 0, dev = 0, q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        lc = std::max(lc, std::fabs(1.0 * d.x[i] + 2.0 * d.y[i] + -0.5 * d.z[i]));
        dev = std::max(dev, std::fabs(d.x[i] - d.y[i]) / d.s[i]);
        q = std::max(q, std::fabs(d.x[i] * d.x[i] - d.y[i] * d.y[i] + d.z[i] * d.z[i] - 1.0));
      }
      Results r = run(k, d);
      CHECK(r.lincomb == lc);
      CHECK(r.deviation == dev);
      CHECK(r.quadric == doctest::Approx(q).epsilon(1e-15));
    }
  }

  TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
    if (!avx2_available()) {
      MESSAGE("AVX2 not available on this machine; skipped");
      CHECK_THROWS(kernels_for(Isa::avx2));
      return;
    }
    const Kernels& s = scalar_kernels();
    const Kernels& v = kernels_for(Isa::avx2);
    CHECK(v.isa == Isa::avx2);
    for (std::size_t n : kSizes) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CAPTURE(n);
        Data d = sample_data(n, 100 * n + seed);
        Results a = run(s, d), b = run(v, d);
        CHECK(same_bits(a.lincomb, b.lincomb));
        CHECK(same_bits(a.deviation, b.deviation));
        CHECK(same_bits(a.quadric, b.quadric));
      }
    }
  }

  TEST_CASE("a NaN anywhere propagates in every variant") {
    std::vector<const Kernels*> ks{&scalar_kernels()};
    if (avx2_available()) ks.push_back(&kernels_for(Isa::avx2));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const Kernels* k : ks)
      for (std::size_t n : {1, 5, 8, 13})
        for (std::size_t pos = 0; pos < n; ++pos) {
          CAPTURE(n);
          CAPTURE(pos);
          Data d = sample_data(n, 7);
          d.y[pos] = nan;
          Results r = run(*k, d);
          CHECK(std::isnan(r.lincomb));
          CHECK(std::isnan(r.deviation));
          CHECK(std::isnan(r.quadric));
        }
  }

  TEST_CASE("dispatch names") {
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
    CHECK(kernels_for(Isa::scalar).isa == Isa::scalar);
    const char* forced = std::getenv("MINHYP_SIMD");
    if (forced && std::string_view(forced) == "scalar") CHECK(kernels().isa == Isa::scalar);
  }
}
