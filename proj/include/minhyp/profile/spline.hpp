#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "minhyp/geometry/jet.hpp"

namespace minhyp::profile {

/// Quintic Hermite interpolant through values, first and second derivatives
/// at increasing nodes. Reproduces all three exactly at the nodes and is C2.
/// Evaluates on any arithmetic type (double or geometry::Jet).
template <std::size_t D>
class HermiteSpline {
 public:
  struct Node {
    double s;
    std::array<double, D> p, dp, ddp;
  };

  HermiteSpline() = default;
  explicit HermiteSpline(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw std::invalid_argument("spline needs at least two nodes");
    for (std::size_t i = 1; i < nodes_.size(); ++i)
      if (!(nodes_[i].s > nodes_[i - 1].s)) throw std::invalid_argument("spline nodes must increase");
  }

  double begin() const { return nodes_.front().s; }
  double end() const { return nodes_.back().s; }
  const std::vector<Node>& nodes() const { return nodes_; }

  template <class T>
  std::array<T, D> operator()(const T& s) const {
    using geometry::value;
    std::size_t i = segment(value(s));
    const Node& a = nodes_[i];
    const Node& b = nodes_[i + 1];
    double h = b.s - a.s;
    T t = (s - a.s) / h;
    T t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    T h1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    T h2 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
    T h3 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    T h4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    T h5 = 0.5 * (t3 - 2.0 * t4 + t5);
    std::array<T, D> out;
    for (std::size_t k = 0; k < D; ++k)
      out[k] = a.p[k] + h3 * (b.p[k] - a.p[k]) + h1 * (h * a.dp[k]) + h2 * (h * h * a.ddp[k]) +
               h4 * (h * b.dp[k]) + h5 * (h * h * b.ddp[k]);
    return out;
  }

 private:
  std::size_t segment(double s) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), s, [](double x, const Node& n) { return x < n.s; });
    std::size_t i = it == nodes_.begin() ? 0 : std::size_t(it - nodes_.begin()) - 1;
    return std::min(i, nodes_.size() - 2);
  }

  std::vector<Node> nodes_;
};

/// Piecewise degree-5 Lagrange interpolant through node values only, on the
/// six nodes around the evaluation segment. Smooth node errors (global
/// integration error) stay smooth in the second derivative, which a Hermite
/// fit of inconsistent value/derivative data does not guarantee.
template <std::size_t D>
class NodalSpline {
 public:
  static constexpr std::size_t kStencil = 6;

  NodalSpline() = default;
  NodalSpline(std::vector<double> s, std::vector<std::array<double, D>> p) : s_(std::move(s)), p_(std::move(p)) {
    if (s_.size() != p_.size()) throw std::invalid_argument("node and value counts differ");
    if (s_.size() < kStencil) throw std::invalid_argument("nodal spline needs at least six nodes");
    for (std::size_t i = 1; i < s_.size(); ++i)
      if (!(s_[i] > s_[i - 1])) throw std::invalid_argument("spline nodes must increase");
  }

  double begin() const { return s_.front(); }
  double end() const { return s_.back(); }

  template <class T>
  std::array<T, D> operator()(const T& s) const {
    using geometry::value;
    double x = value(s);
    auto it = std::upper_bound(s_.begin(), s_.end(), x);
    std::size_t seg = it == s_.begin() ? 0 : std::size_t(it - s_.begin()) - 1;
    seg = std::min(seg, s_.size() - 2);
    std::size_t j0 = seg >= 2 ? seg - 2 : 0;
    j0 = std::min(j0, s_.size() - kStencil);
    // Offsets from the first stencil value keep the cancellation in the
    // derivatives of the weights (which sum to 1) out of the result.
    std::array<T, D> out;
    for (std::size_t k = 0; k < D; ++k) out[k] = T(p_[j0][k]);
    for (std::size_t m = j0 + 1; m < j0 + kStencil; ++m) {
      T w(1.0);
      for (std::size_t q = j0; q < j0 + kStencil; ++q)
        if (q != m) w = w * ((s - s_[q]) / (s_[m] - s_[q]));
      for (std::size_t k = 0; k < D; ++k) out[k] = out[k] + w * (p_[m][k] - p_[j0][k]);
    }
    return out;
  }

 private:
  std::vector<double> s_;
  std::vector<std::array<double, D>> p_;
};

}  // namespace minhyp::profile
