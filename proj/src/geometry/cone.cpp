#include <cmath>
#include <numbers>

#include "minhyp/geometry/constructions.hpp"

namespace minhyp::geometry {

HypersurfacePatch generalized_cone(MinimalBase base, const SpaceFormModel& model, double cbar, double t_lo,
                                   double t_hi, std::string name) {
  const double c = model.c();
  if (!(cbar > 0)) throw std::invalid_argument("cone slices need cbar > 0");
  if (cbar < c) throw std::invalid_argument("cone slices need cbar >= c");
  if (!(t_hi > t_lo)) throw std::invalid_argument("cone parameter range is empty");

  const double rho = 1 / std::sqrt(cbar);
  const int n = model.dim();
  // Axis along which the slice is cut, and the remaining axes carrying sigma.
  int axis = c < 0 ? model.time_axis() : (c > 0 ? 4 : -1);
  std::array<int, 4> span{};
  for (int k = 0, m = 0; k < n && m < 4; ++k)
    if (k != axis) span[m++] = k;
  double a = 0, eta_a = 1, norm = 1;
  if (c > 0) {
    a = std::sqrt(std::max(0.0, 1 / c - rho * rho));
  } else if (c < 0) {
    a = std::sqrt(rho * rho - 1 / c);
    eta_a = -1;
  }
  if (c != 0) norm = std::sqrt(eta_a - c * a * a);

  HypersurfacePatch patch;
  patch.name = std::move(name);
  patch.model = model;
  if (base == MinimalBase::clifford_torus) {
    patch.lo = {0, 0, t_lo};
    patch.hi = {2 * std::numbers::pi, 2 * std::numbers::pi, t_hi};
  } else {
    patch.lo = {0.25, 0, t_lo};
    patch.hi = {std::numbers::pi - 0.25, 2 * std::numbers::pi, t_hi};
  }
  patch.chart = make_chart([=](const auto& u) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    using T = std::decay_t<decltype(u[0])>;
    std::array<T, 4> sigma;
    if (base == MinimalBase::clifford_torus) {
      const double r = std::numbers::sqrt2 / 2;
      sigma = {r * cos(u[0]), r * sin(u[0]), r * cos(u[1]), r * sin(u[1])};
    } else {
      T sx = sin(u[0]);
      sigma = {cos(u[0]), sx * cos(u[1]), sx * sin(u[1]), T(0.0)};
    }
    std::vector<T> g(n, T(0.0)), xi(n, T(0.0));
    for (int m = 0; m < 4; ++m) g[span[m]] = rho * sigma[m];
    if (c == 0) {
      for (int m = 0; m < 4; ++m) xi[span[m]] = sigma[m];
    } else {
      g[axis] = T(a);
      for (int k = 0; k < n; ++k) xi[k] = (-c * eta_a * a) * g[k];
      xi[axis] += T(1.0);
      for (int k = 0; k < n; ++k) xi[k] = xi[k] / norm;
    }
    const T& t = u[2];
    T cg, sx;
    if (c > 0) {
      double w = std::sqrt(c);
      cg = cos(w * t);
      sx = sin(w * t) / w;
    } else if (c < 0) {
      double w = std::sqrt(-c);
      cg = cosh(w * t);
      sx = sinh(w * t) / w;
    } else {
      cg = T(1.0);
      sx = t;
    }
    std::vector<T> x(n);
    for (int k = 0; k < n; ++k) x[k] = cg * g[k] + sx * xi[k];
    return x;
  });
  return patch;
}

}  // namespace minhyp::geometry
