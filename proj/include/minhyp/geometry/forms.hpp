#pragma once

#include <array>
#include <optional>
#include <vector>

#include "minhyp/geometry/patch.hpp"

namespace minhyp::geometry {

using Mat3 = std::array<std::array<double, 3>, 3>;

struct FundamentalForms {
  Mat3 I{};
  Mat3 II{};
  std::vector<double> normal;
  std::vector<double> position;
  std::array<std::vector<double>, 3> tangents;
  double gram_det = 0;
  /// max |<N, dF/du_i>| and |<N, F>| (c != 0)
  double normal_defect = 0;
  /// |<N, N> - 1|
  double normal_norm_defect = 0;
};

/// First form from the chart partials, unit normal orthogonal to the tangents
/// and (c != 0) to the position, second form from the second partials. With
/// `orient_against` the normal is flipped so that <N, orient_against> <= 0.
/// Throws GeometryError when the Gram determinant is not positive.
FundamentalForms fundamental_forms(const HypersurfacePatch& patch, const Coords& u,
                                   const std::vector<double>* orient_against = nullptr);

struct PrincipalData {
  std::array<double, 3> lambda{};  ///< ascending
  /// Principal directions in chart coordinates, matching lambda.
  std::array<std::array<double, 3>, 3> directions{};
  double H = 0;       ///< lambda_1 + lambda_2 + lambda_3
  double H_mean = 0;  ///< H / 3
};

/// Eigenvalues of I^{-1} II via the Cholesky congruence L^{-1} II L^{-T} and a
/// symmetric eigen-solve. Throws GeometryError unless I is positive definite.
PrincipalData principal_curvatures(const FundamentalForms& ff);
PrincipalData principal_curvatures(const Mat3& I, const Mat3& II);

/// The repeated value mu and the simple one mu3 when exactly two principal
/// curvatures agree within a relative gap (all three agreeing counts too, with
/// mu3 = mu).
struct DoubleRoot {
  double mu = 0;
  double mu3 = 0;
};
std::optional<DoubleRoot> double_root(const PrincipalData& p, double rel_gap = 1e-4);

/// Intrinsic sectional curvature of the coordinate planes (12, 13, 23) from the
/// first fundamental form alone: Christoffel symbols from the chart jets, their
/// derivatives by central differences with step h.
std::array<double, 3> coordinate_sectional_curvatures(const HypersurfacePatch& patch, const Coords& u, double h);

/// max over coordinate planes of |K_ij - c - (II_ii II_jj - II_ij^2) / (I_ii I_jj - I_ij^2)|.
double gauss_residual(const HypersurfacePatch& patch, const Coords& u, double h);

}  // namespace minhyp::geometry
