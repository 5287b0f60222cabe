#include <Eigen/Dense>
#include <cmath>

#include "minhyp/geometry/forms.hpp"

namespace minhyp::geometry {

namespace {

// Euclidean generalized cross product of the rows of `m` ((n-1) x n).
Eigen::VectorXd cross(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.cols();
  Eigen::VectorXd w(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index j = 0, col = 0; j < n; ++j) {
      if (j == k) continue;
      minor.col(col++) = m.col(j);
    }
    w[k] = ((k % 2) ? -1.0 : 1.0) * minor.determinant();
  }
  return w;
}

using Gamma = std::array<Mat3, 3>;  // Gamma[k][i][j]

struct Metric {
  Mat3 g{};
  std::array<Mat3, 3> dg{};  // dg[m][i][j] = d_m g_ij
};

Metric metric_at(const HypersurfacePatch& patch, const Coords& u) {
  ChartJet j = chart_jet(patch, u);
  const auto& M = patch.model;
  Metric out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      out.g[i][k] = M.inner(j.d[i], j.d[k]);
      for (int m = 0; m < 3; ++m) out.dg[m][i][k] = M.inner(j.dd[i][m], j.d[k]) + M.inner(j.d[i], j.dd[k][m]);
    }
  return out;
}

Mat3 inverse(const Mat3& a) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = a[i][k];
  Eigen::Matrix3d inv = m.inverse();
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i][k] = inv(i, k);
  return out;
}

Gamma christoffel(const Metric& m) {
  Mat3 gi = inverse(m.g);
  Gamma G{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int l = 0; l < 3; ++l) s += gi[k][l] * (m.dg[i][j][l] + m.dg[j][i][l] - m.dg[l][i][j]);
        G[k][i][j] = 0.5 * s;
      }
  return G;
}

}  // namespace

FundamentalForms fundamental_forms(const HypersurfacePatch& patch, const Coords& u,
                                   const std::vector<double>* orient_against) {
  const auto& M = patch.model;
  ChartJet j = chart_jet(patch, u);
  const int n = M.dim();
  if (int(j.x.size()) != n) throw GeometryError("chart dimension does not match the model");

  FundamentalForms ff;
  ff.position = j.x;
  ff.tangents = j.d;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) ff.I[a][b] = M.inner(j.d[a], j.d[b]);
  Eigen::Matrix3d I;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) I(a, b) = ff.I[a][b];
  ff.gram_det = I.determinant();
  if (!(ff.gram_det > 0)) throw GeometryError("degenerate first fundamental form in patch " + patch.name);

  const bool curved = M.c() != 0;
  Eigen::MatrixXd rows(n - 1, n);
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < n; ++k) rows(a, k) = j.d[a][k];
  if (curved)
    for (int k = 0; k < n; ++k) rows(3, k) = j.x[k];
  Eigen::VectorXd w = cross(rows);
  std::vector<double> N(n);
  for (int k = 0; k < n; ++k) N[k] = M.eta()[k] * w[k];
  double nn = M.inner(N, N);
  if (!(nn > 0)) throw GeometryError("normal is not spacelike in patch " + patch.name);
  double scale = 1 / std::sqrt(nn);
  for (double& v : N) v *= scale;
  if (orient_against && M.inner(N, *orient_against) > 0)
    for (double& v : N) v = -v;

  for (int a = 0; a < 3; ++a) {
    ff.normal_defect = std::max(ff.normal_defect, std::fabs(M.inner(N, j.d[a])));
    for (int b = 0; b < 3; ++b) ff.II[a][b] = M.inner(j.dd[a][b], N);
  }
  if (curved) ff.normal_defect = std::max(ff.normal_defect, std::fabs(M.inner(N, j.x)));
  ff.normal_norm_defect = std::fabs(M.inner(N, N) - 1);
  ff.normal = std::move(N);
  return ff;
}

std::array<double, 3> coordinate_sectional_curvatures(const HypersurfacePatch& patch, const Coords& u, double h) {
  Metric m0 = metric_at(patch, u);
  Gamma G = christoffel(m0);
  std::array<Gamma, 3> dG{};  // dG[m][k][i][j] = d_m Gamma^k_ij
  for (int a = 0; a < 3; ++a) {
    Coords up = u, um = u;
    up[a] += h;
    um[a] -= h;
    Gamma Gp = christoffel(metric_at(patch, up));
    Gamma Gm = christoffel(metric_at(patch, um));
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dG[a][k][i][j] = (Gp[k][i][j] - Gm[k][i][j]) / (2 * h);
  }
  // R^l_ijk for R(d_i, d_j) d_k
  auto R = [&](int l, int i, int j, int k) {
    double r = dG[i][l][j][k] - dG[j][l][i][k];
    for (int q = 0; q < 3; ++q) r += G[q][j][k] * G[l][i][q] - G[q][i][k] * G[l][j][q];
    return r;
  };
  const int planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::array<double, 3> K{};
  for (int p = 0; p < 3; ++p) {
    int i = planes[p][0], j = planes[p][1];
    double num = 0;
    for (int l = 0; l < 3; ++l) num += m0.g[i][l] * R(l, i, j, j);
    K[p] = num / (m0.g[i][i] * m0.g[j][j] - m0.g[i][j] * m0.g[i][j]);
  }
  return K;
}

double gauss_residual(const HypersurfacePatch& patch, const Coords& u, double h) {
  auto K = coordinate_sectional_curvatures(patch, u, h);
  FundamentalForms ff = fundamental_forms(patch, u);
  const int planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  double worst = 0;
  for (int p = 0; p < 3; ++p) {
    int i = planes[p][0], j = planes[p][1];
    double area = ff.I[i][i] * ff.I[j][j] - ff.I[i][j] * ff.I[i][j];
    double extrinsic = (ff.II[i][i] * ff.II[j][j] - ff.II[i][j] * ff.II[i][j]) / area;
    worst = std::max(worst, std::fabs(K[p] - patch.model.c() - extrinsic));
  }
  return worst;
}

}  // namespace minhyp::geometry
