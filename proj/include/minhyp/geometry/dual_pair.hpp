#pragma once

#include <array>
#include <string>
#include <vector>

#include "minhyp/geometry/patch.hpp"

namespace minhyp::geometry {

/// Which pairing of the classification is being checked.
enum class PairCase {
  umbilic,   ///< totally geodesic f, umbilic f~
  catenary,  ///< catenary rotation f, dual rotation f~ through the same radius
  cone,      ///< generalized cone f, helix rotation f~
};
std::string_view to_string(PairCase k);

struct Tolerances {
  double minimal = 1e-5;     ///< |sum lambda|, |lambda3 + 2 lambda|, |lambda| for totally geodesic f
  double metric = 1e-6;      ///< relative deviation of the two first forms
  double relation = 1e-5;       ///< principal-curvature relations of the second immersion
  double ruling = 1e-8;      ///< normal curvature along the cone ruling
  double mu_squared = 1e-6;  ///< mu^2 = c - ct for the umbilic partner
  double model = 1e-10;      ///< quadric and normal contracts
  double gauss = 1e-4;       ///< Gauss equation against intrinsic curvature
};

struct DualPairOptions {
  PairCase kind = PairCase::catenary;
  double c = 1;
  double ct = 0;
  std::array<int, 3> grid{20, 10, 10};
  double rel_gap = 1e-4;     ///< multiplicity threshold
  double gauss_step = 1e-3;  ///< finite-difference step for intrinsic curvature
  Tolerances tol;
  unsigned threads = 0;
};

struct Measure {
  std::string name;
  double value = 0;
  double tol = 0;
  bool passed() const { return value <= tol; }  // NaN fails
};

/// Residuals at one grid sample; NaN where a quantity does not apply.
struct SampleRow {
  Coords u{};   ///< chart coordinates of f
  Coords ut{};  ///< chart coordinates of f~
  double metric = 0;
  double sum_lambda = 0;
  double lambda_pattern = 0;
  double relation = 0;
  double gauss_f = 0;
  double gauss_ft = 0;
};

struct DualPairReport {
  PairCase kind = PairCase::catenary;
  std::vector<Measure> measures;
  std::vector<SampleRow> rows;
  std::vector<std::string> notes;
  bool passed() const;
  const Measure* find(std::string_view name) const;
};

/// Samples both patches on the interior grid and reports the first-form
/// deviation (umbilic and catenary cases, where both share the chart
/// (s, t1, t2)), the principal-curvature pattern of f, the relation the
/// second immersion must satisfy, and the model/normal/Gauss contracts.
DualPairReport check_dual_pair(const HypersurfacePatch& f, const HypersurfacePatch& ft, const DualPairOptions& opts);

}  // namespace minhyp::geometry
