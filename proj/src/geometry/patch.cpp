#include "minhyp/geometry/patch.hpp"

namespace minhyp::geometry {

bool HypersurfacePatch::contains(const Coords& u) const {
  for (int i = 0; i < 3; ++i)
    if (!(u[i] >= lo[i] && u[i] <= hi[i])) return false;
  return true;
}

ChartJet chart_jet(const HypersurfacePatch& patch, const Coords& u) { return chart_jet(patch, u, patch.mode); }

ChartJet chart_jet(const HypersurfacePatch& patch, const Coords& u, Derivatives mode) {
  ChartJet out;
  if (mode == Derivatives::jet) {
    std::array<Jet, 3> ju{Jet::variable(u[0], 0), Jet::variable(u[1], 1), Jet::variable(u[2], 2)};
    std::vector<Jet> f = (*patch.chart)(ju);
    std::size_t n = f.size();
    out.x.resize(n);
    for (int i = 0; i < 3; ++i) {
      out.d[i].resize(n);
      for (int k = 0; k < 3; ++k) out.dd[i][k].resize(n);
    }
    for (std::size_t a = 0; a < n; ++a) {
      out.x[a] = f[a].v;
      for (int i = 0; i < 3; ++i) {
        out.d[i][a] = f[a].d[i];
        for (int k = 0; k < 3; ++k) out.dd[i][k][a] = f[a].hess(i, k);
      }
    }
    return out;
  }

  const double h = patch.fd_step;
  auto at = [&](double d0, double d1, double d2) {
    return patch.point({u[0] + d0, u[1] + d1, u[2] + d2});
  };
  auto shift = [&](int i, double s) {
    Coords e{};
    e[i] = s;
    return e;
  };
  out.x = patch.point(u);
  std::size_t n = out.x.size();
  std::array<std::vector<double>, 3> plus, minus;
  for (int i = 0; i < 3; ++i) {
    auto ep = shift(i, h), em = shift(i, -h);
    plus[i] = at(ep[0], ep[1], ep[2]);
    minus[i] = at(em[0], em[1], em[2]);
    out.d[i].resize(n);
    out.dd[i][i].resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      out.d[i][a] = (plus[i][a] - minus[i][a]) / (2 * h);
      out.dd[i][i][a] = (plus[i][a] - 2 * out.x[a] + minus[i][a]) / (h * h);
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k) {
      Coords pp{}, pm{}, mp{}, mm{};
      pp[i] = h, pp[k] = h;
      pm[i] = h, pm[k] = -h;
      mp[i] = -h, mp[k] = h;
      mm[i] = -h, mm[k] = -h;
      auto fpp = at(pp[0], pp[1], pp[2]), fpm = at(pm[0], pm[1], pm[2]);
      auto fmp = at(mp[0], mp[1], mp[2]), fmm = at(mm[0], mm[1], mm[2]);
      out.dd[i][k].resize(n);
      for (std::size_t a = 0; a < n; ++a) out.dd[i][k][a] = (fpp[a] - fpm[a] - fmp[a] + fmm[a]) / (4 * h * h);
      out.dd[k][i] = out.dd[i][k];
    }
  return out;
}

std::vector<Coords> interior_grid(const HypersurfacePatch& patch, int n1, int n2, int n3) {
  std::vector<Coords> pts;
  pts.reserve(std::size_t(n1) * n2 * n3);
  const int n[3] = {n1, n2, n3};
  auto coord = [&](int axis, int i) {
    return patch.lo[axis] + (i + 0.5) * (patch.hi[axis] - patch.lo[axis]) / n[axis];
  };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n3; ++k) pts.push_back({coord(0, i), coord(1, j), coord(2, k)});
  return pts;
}

}  // namespace minhyp::geometry
