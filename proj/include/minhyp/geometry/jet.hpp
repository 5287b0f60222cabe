#pragma once

#include <array>
#include <cmath>

namespace minhyp::geometry {

/// Second-order truncated Taylor number in three variables: value, gradient
/// and the packed Hessian (00, 01, 02, 11, 12, 22).
struct Jet {
  double v = 0;
  std::array<double, 3> d{};
  std::array<double, 6> h{};

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT(implicit)

  /// The coordinate function u_i at `value`.
  static Jet variable(double value, int i) {
    Jet j(value);
    j.d[i] = 1;
    return j;
  }
  static constexpr int hidx(int i, int k) {
    constexpr int t[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return t[i][k];
  }
  double hess(int i, int k) const { return h[hidx(i, k)]; }

  /// f(x) given f, f', f'' at x.value.
  friend Jet chain(const Jet& x, double f0, double f1, double f2) {
    Jet r(f0);
    for (int i = 0; i < 3; ++i) r.d[i] = f1 * x.d[i];
    for (int i = 0; i < 3; ++i)
      for (int k = i; k < 3; ++k) r.h[hidx(i, k)] = f2 * x.d[i] * x.d[k] + f1 * x.h[hidx(i, k)];
    return r;
  }

  Jet operator-() const {
    Jet r;
    r.v = -v;
    for (int i = 0; i < 3; ++i) r.d[i] = -d[i];
    for (int i = 0; i < 6; ++i) r.h[i] = -h[i];
    return r;
  }
  Jet& operator+=(const Jet& b) {
    v += b.v;
    for (int i = 0; i < 3; ++i) d[i] += b.d[i];
    for (int i = 0; i < 6; ++i) h[i] += b.h[i];
    return *this;
  }
  Jet& operator-=(const Jet& b) { return *this += -b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }
  Jet& operator/=(const Jet& b) { return *this = *this / b; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.v * b.v);
    for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    for (int i = 0; i < 3; ++i)
      for (int k = i; k < 3; ++k) {
        int q = hidx(i, k);
        r.h[q] = a.h[q] * b.v + a.d[i] * b.d[k] + a.d[k] * b.d[i] + a.v * b.h[q];
      }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    double inv = 1 / b.v;
    return a * chain(b, inv, -inv * inv, 2 * inv * inv * inv);
  }
};

inline double value(double x) { return x; }
inline double value(const Jet& x) { return x.v; }

inline Jet sin(const Jet& x) { return chain(x, std::sin(x.v), std::cos(x.v), -std::sin(x.v)); }
inline Jet cos(const Jet& x) { return chain(x, std::cos(x.v), -std::sin(x.v), -std::cos(x.v)); }
inline Jet sinh(const Jet& x) { return chain(x, std::sinh(x.v), std::cosh(x.v), std::sinh(x.v)); }
inline Jet cosh(const Jet& x) { return chain(x, std::cosh(x.v), std::sinh(x.v), std::cosh(x.v)); }
inline Jet sqrt(const Jet& x) {
  double s = std::sqrt(x.v);
  return chain(x, s, 0.5 / s, -0.25 / (s * x.v));
}

}  // namespace minhyp::geometry
