#pragma once

#include <string>

#include "minhyp/geometry/patch.hpp"
#include "minhyp/profile/profile.hpp"

namespace minhyp::geometry {

/// Orbit of a profile curve under the rotations fixing the first coordinate
/// axis of the profile: the radius b_1(s) is replaced by b_1(s) Phi(t1, t2)
/// with Phi the unit 2-sphere, so the metric is ds^2 + b_1^2 (dt1^2 + sin^2 t1 dt2^2).
/// Chart (s, t1, t2); t1 is kept `pole_margin` away from the poles.
HypersurfacePatch rotation_hypersurface(const profile::ProfileCurve& profile, const SpaceFormModel& model,
                                        std::string name = "rotation", double pole_margin = 0.25);

/// Minimal surfaces of the unit 3-sphere used as cone bases.
enum class MinimalBase {
  clifford_torus,  ///< (cos x, sin x, cos y, sin y) / sqrt 2
  great_sphere,    ///< totally geodesic 2-sphere
};

/// Generalized cone G(x, y, t) = exp_g(t xi) over a minimal surface g of the
/// umbilical sphere Q^3(cbar) obtained by slicing the model (cbar >= c,
/// cbar > 0). xi is the unit normal of the slice inside Q^4(c). The
/// exponential map is cos/sin (c > 0), cosh/sinh (c < 0) or affine (c = 0).
/// Chart (x, y, t) over [0, 2pi]^2 x [t_lo, t_hi] for the torus.
HypersurfacePatch generalized_cone(MinimalBase base, const SpaceFormModel& model, double cbar, double t_lo,
                                   double t_hi, std::string name = "cone");

}  // namespace minhyp::geometry
