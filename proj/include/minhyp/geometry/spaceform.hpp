#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace minhyp::geometry {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A construction that the target space form does not admit (for example a
/// dual profile leaving the admissible band). Distinct from a failure.
struct ObstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Q^4(c) as a model: the quadric <x,x> = 1/c in R^5 for c > 0, the upper
/// sheet of <x,x> = 1/c in Lorentz R^5_1 for c < 0 (time coordinate at
/// `time_axis`), and R^4 for c = 0.
class SpaceFormModel {
 public:
  static SpaceFormModel make(double c, int time_axis = 3);

  double c() const { return c_; }
  int dim() const { return int(eta_.size()); }
  const std::vector<double>& eta() const { return eta_; }
  /// -1 unless c < 0.
  int time_axis() const { return time_axis_; }

  template <class T>
  T inner(const std::vector<T>& a, const std::vector<T>& b) const {
    T s = 0.0;
    for (std::size_t i = 0; i < eta_.size(); ++i) s += eta_[i] * (a[i] * b[i]);
    return s;
  }
  /// <x,x> - 1/c, or 0 for the flat model.
  double quadric_residual(std::span<const double> x) const;

 private:
  double c_ = 0;
  int time_axis_ = -1;
  std::vector<double> eta_;
};

}  // namespace minhyp::geometry
