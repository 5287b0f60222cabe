#include <cmath>

#include "minhyp/profile/profile.hpp"

namespace minhyp::profile {

HelixHeight helix_height(double c, double A, double B) { return {c, A, B}; }

double HelixHeight::g(double s) const {
  if (c > 0) {
    double w = std::sqrt(c);
    return A * std::cos(w * s) + B * std::sin(w * s);
  }
  if (c < 0) {
    double w = std::sqrt(-c);
    return A * std::cosh(w * s) + B * std::sinh(w * s);
  }
  return A + B * s;
}

double HelixHeight::dg(double s) const {
  if (c > 0) {
    double w = std::sqrt(c);
    return w * (-A * std::sin(w * s) + B * std::cos(w * s));
  }
  if (c < 0) {
    double w = std::sqrt(-c);
    return w * (A * std::sinh(w * s) + B * std::cosh(w * s));
  }
  return B;
}

HeightFunction HelixHeight::sample(double s0, double s1, double step) const {
  if (!(step > 0)) throw ProfileError("step must be positive");
  if (!(s1 > s0)) throw ProfileError("sampling interval is empty");
  std::size_t n = std::max<std::size_t>(1, std::size_t(std::llround((s1 - s0) / step)));
  HeightFunction out;
  out.step = (s1 - s0) / double(n);
  out.samples.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double s = s0 + double(i) * out.step;
    out.samples.push_back({s, g(s), dg(s), ddg(s)});
  }
  return out;
}

}  // namespace minhyp::profile
