#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "minhyp/geometry/jet.hpp"
#include "minhyp/geometry/spaceform.hpp"

namespace minhyp::geometry {

using Coords = std::array<double, 3>;

/// Chart map (u1, u2, u3) -> ambient point, evaluable on doubles and on jets.
class Chart {
 public:
  virtual ~Chart() = default;
  virtual std::vector<double> operator()(const std::array<double, 3>& u) const = 0;
  virtual std::vector<Jet> operator()(const std::array<Jet, 3>& u) const = 0;
};

template <class F>
class FunctionChart final : public Chart {
 public:
  explicit FunctionChart(F f) : f_(std::move(f)) {}
  std::vector<double> operator()(const std::array<double, 3>& u) const override { return f_(u); }
  std::vector<Jet> operator()(const std::array<Jet, 3>& u) const override { return f_(u); }

 private:
  F f_;
};

/// Wraps a generic callable `f(const std::array<T, 3>&) -> std::vector<T>`.
template <class F>
std::shared_ptr<const Chart> make_chart(F f) {
  return std::make_shared<FunctionChart<F>>(std::move(f));
}

enum class Derivatives {
  jet,      ///< forward-mode second-order jets, exact up to rounding
  central,  ///< central differences with step fd_step
};

struct HypersurfacePatch {
  std::string name;
  SpaceFormModel model;
  std::shared_ptr<const Chart> chart;
  Coords lo{}, hi{};  ///< domain box
  Derivatives mode = Derivatives::jet;
  double fd_step = 1e-4;

  std::vector<double> point(const Coords& u) const { return (*chart)(u); }
  bool contains(const Coords& u) const;
};

/// Position, first and second partials of the chart at u.
struct ChartJet {
  std::vector<double> x;
  std::array<std::vector<double>, 3> d;
  std::array<std::array<std::vector<double>, 3>, 3> dd;
};
ChartJet chart_jet(const HypersurfacePatch& patch, const Coords& u);
ChartJet chart_jet(const HypersurfacePatch& patch, const Coords& u, Derivatives mode);

/// Cell-centred grid points of the domain box, u1 slowest.
std::vector<Coords> interior_grid(const HypersurfacePatch& patch, int n1, int n2, int n3);

}  // namespace minhyp::geometry
