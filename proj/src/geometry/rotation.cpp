#include <cmath>
#include <numbers>

#include "minhyp/geometry/constructions.hpp"

namespace minhyp::geometry {

HypersurfacePatch rotation_hypersurface(const profile::ProfileCurve& profile, const SpaceFormModel& model,
                                        std::string name, double pole_margin) {
  if (profile.samples.size() < 2) throw GeometryError("profile curve has fewer than two samples");
  if (profile.k != model.c()) throw GeometryError("profile curvature does not match the model");
  if (model.c() < 0 && model.time_axis() != 3) throw GeometryError("rotation chart expects the time axis at 3");
  const bool flat = model.c() == 0;
  profile::ProfileEvaluator spline(profile);
  HypersurfacePatch patch;
  patch.name = std::move(name);
  patch.model = model;
  patch.lo = {profile.s_begin(), pole_margin, 0};
  patch.hi = {profile.s_end(), std::numbers::pi - pole_margin, 2 * std::numbers::pi};
  patch.chart = make_chart([spline, flat](const auto& u) {
    using std::cos;
    using std::sin;
    using T = std::decay_t<decltype(u[0])>;
    auto b = spline(u[0]);
    T st = sin(u[1]);
    std::vector<T> x{b[0] * cos(u[1]), b[0] * st * cos(u[2]), b[0] * st * sin(u[2]), b[1]};
    if (!flat) x.push_back(b[2]);
    return x;
  });
  return patch;
}

}  // namespace minhyp::geometry
