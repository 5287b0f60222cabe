#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "minhyp/geometry/forms.hpp"

namespace minhyp::geometry {

PrincipalData principal_curvatures(const FundamentalForms& ff) { return principal_curvatures(ff.I, ff.II); }

PrincipalData principal_curvatures(const Mat3& I, const Mat3& II) {
  Eigen::Matrix3d g, b;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      g(i, k) = I[i][k];
      b(i, k) = II[i][k];
    }
  Eigen::LLT<Eigen::Matrix3d> llt(g);
  if (llt.info() != Eigen::Success) throw GeometryError("first fundamental form is not positive definite");
  Eigen::Matrix3d L = llt.matrixL();
  Eigen::Matrix3d Linv = L.inverse();
  Eigen::Matrix3d C = Linv * b * Linv.transpose();
  C = 0.5 * (C + C.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(C);
  if (es.info() != Eigen::Success) throw GeometryError("eigen-solve failed");
  Eigen::Matrix3d dirs = Linv.transpose() * es.eigenvectors();

  PrincipalData out;
  for (int i = 0; i < 3; ++i) {
    out.lambda[i] = es.eigenvalues()[i];
    for (int k = 0; k < 3; ++k) out.directions[i][k] = dirs(k, i);
  }
  out.H = out.lambda[0] + out.lambda[1] + out.lambda[2];
  out.H_mean = out.H / 3;
  return out;
}

std::optional<DoubleRoot> double_root(const PrincipalData& p, double rel_gap) {
  const auto& l = p.lambda;
  double scale = std::max({std::fabs(l[0]), std::fabs(l[2]), 1e-300});
  bool low = std::fabs(l[1] - l[0]) <= rel_gap * scale;
  bool high = std::fabs(l[2] - l[1]) <= rel_gap * scale;
  if (low && high) {
    double m = (l[0] + l[1] + l[2]) / 3;
    return DoubleRoot{m, m};
  }
  if (low) return DoubleRoot{0.5 * (l[0] + l[1]), l[2]};
  if (high) return DoubleRoot{0.5 * (l[1] + l[2]), l[0]};
  return std::nullopt;
}

}  // namespace minhyp::geometry
