#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "minhyp/geometry/constructions.hpp"
#include "minhyp/geometry/dual_pair.hpp"
#include "minhyp/profile/profile.hpp"

namespace minhyp::geometry {

/// Inputs of one construction of the classification. Unset optional fields
/// take the per-case defaults documented in the README.
struct PairParams {
  PairCase kind = PairCase::catenary;
  double c = 1;
  double ct = 0;
  double step = 1e-3;
  std::optional<double> s0, length;
  // catenary
  std::optional<double> r;  ///< defaults to c
  int delta = 1;
  double gamma0 = 0.5;
  double dgamma0 = 0;
  profile::CatenaryForm form = profile::CatenaryForm::quadratic;
  // cone
  std::optional<double> cbar;  ///< defaults to c when c > 0, else 1
  double helix_a = 0.5;
  double helix_b = 0;
  double t_half = 0.6;  ///< cone parameter range [-t_half, t_half]
};

struct PairBuild {
  profile::HeightFunction height;
  std::optional<profile::ProfileCurve> profile_f;  ///< absent for the cone
  profile::ProfileCurve profile_ft;
  HypersurfacePatch f;
  HypersurfacePatch ft;
};

/// Throws ObstructionError when the construction is not admitted (c <= ct in
/// the umbilic and cone cases, or a dual profile leaving its admissible
/// band), profile::ProfileError for unusable parameters.
PairBuild build_pair(const PairParams& p);

/// Max relative deviation of the first form of a rotation patch from the
/// warped product ds^2 + b_1(s)^2 (dt1^2 + sin^2 t1 dt2^2).
double rotation_metric_deviation(const HypersurfacePatch& rot, const profile::ProfileCurve& prof,
                                 const std::vector<Coords>& points);

struct ConvergenceRow {
  double step = 0;
  double ode_residual = 0;  ///< a posteriori catenary residual
  double sum_lambda = 0;    ///< max |sum lambda| of f
  double relation = 0;         ///< max |2 mu + mu3 - 3 (c - ct) / mu| of f~
};
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  /// Least-squares slopes of log residual against log step over all rows.
  double ode_order = 0;
  double lambda_order = 0;
  double relation_order = 0;
};

/// Least-squares slope of log(row.*field) against log(row.step); NaN for
/// fewer than two rows.
double fitted_order(const std::vector<ConvergenceRow>& rows, double ConvergenceRow::*field);

/// Steps at which the default catenary is in its asymptotic range: above them
/// the high derivatives of the height dominate, below them rounding does.
inline const std::vector<double> kConvergenceSteps{0.016, 0.008, 0.004, 0.002};

/// Catenary case at the given steps (coarse to fine). The s direction is
/// sampled densely so the maximum does not depend on where samples fall
/// between nodes.
ConvergenceTable catenary_convergence(const PairParams& p, const std::vector<double>& steps,
                                      std::array<int, 3> grid = {61, 2, 2});

}  // namespace minhyp::geometry
