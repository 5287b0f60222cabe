#include "minhyp/geometry/spaceform.hpp"

#include <cmath>

namespace minhyp::geometry {

SpaceFormModel SpaceFormModel::make(double c, int time_axis) {
  if (!std::isfinite(c)) throw GeometryError("curvature must be finite");
  SpaceFormModel m;
  m.c_ = c;
  if (c == 0) {
    m.eta_.assign(4, 1.0);
    return m;
  }
  m.eta_.assign(5, 1.0);
  if (c < 0) {
    if (time_axis < 0 || time_axis > 4) throw GeometryError("time axis out of range");
    m.time_axis_ = time_axis;
    m.eta_[time_axis] = -1;
  }
  return m;
}

double SpaceFormModel::quadric_residual(std::span<const double> x) const {
  if (c_ == 0) return 0;
  double s = 0;
  for (std::size_t i = 0; i < eta_.size(); ++i) s += eta_[i] * (x[i] * x[i]);
  return s - 1 / c_;
}

}  // namespace minhyp::geometry
