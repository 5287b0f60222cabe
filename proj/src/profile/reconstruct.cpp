#include <algorithm>
#include <cmath>
#include <sstream>
#include <variant>

#include "minhyp/profile/profile.hpp"
#include "minhyp/simd/kernels.hpp"

namespace minhyp::profile {

namespace {

struct Local {
  double w = 0, dw = 0, ddw = 0;
  double dth = 0, ddth = 0;  // theta' and theta'' (x' and x'' for k = 0)
};

std::string at_s(const char* what, double s) {
  std::ostringstream os;
  os.precision(10);
  os << what << " near s = " << s;
  return os.str();
}

// Remaining radius and angular speed at one point of the height function.
// Returns the failure reason instead when the point is inadmissible.
std::variant<Local, std::string> local_frame(double k, double g, double dg, double ddg, double s,
                                             const ReconstructOptions& o) {
  Local l;
  double R;
  double sigma = k > 0 ? 1.0 : -1.0;
  if (k == 0) {
    R = 1 - dg * dg;
  } else {
    double w2 = sigma * (1 / k - g * g);
    if (!(w2 > o.floor * o.floor)) return at_s("remaining radius collapses (axis collision)", s);
    l.w = std::sqrt(w2);
    l.dw = -sigma * g * dg / l.w;
    l.ddw = (-sigma * (dg * dg + g * ddg) - l.dw * l.dw) / l.w;
    R = 1 - dg * dg - sigma * l.dw * l.dw;
  }
  if (R < -o.radicand_tol) return at_s("unit-speed radicand is negative (curve leaves the admissible band)", s);
  if (R < o.flat_radicand) return l;
  double root = std::sqrt(R);
  if (k == 0) {
    l.dth = root;
    l.ddth = -dg * ddg / root;
    return l;
  }
  l.dth = root / l.w;
  double dR = -2 * dg * ddg - 2 * sigma * l.dw * l.ddw;
  l.ddth = (dR / (2 * root) - root * l.dw / l.w) / l.w;
  return l;
}

ProfileSample assemble(double k, double s, double g, double dg, double ddg, const Local& l, double th) {
  ProfileSample out{s, {}, {}, {}, th, l.dth, l.ddth};
  if (k == 0) {
    out.p = {g, th, 0};
    out.dp = {dg, l.dth, 0};
    out.ddp = {ddg, l.ddth, 0};
    return out;
  }
  double sigma = k > 0 ? 1.0 : -1.0;
  double C = k > 0 ? std::cos(th) : std::cosh(th);
  double S = k > 0 ? std::sin(th) : std::sinh(th);
  double w = l.w, dw = l.dw, ddw = l.ddw, t1 = l.dth, t2 = l.ddth;
  out.p = {g, w * C, w * S};
  out.dp = {dg, dw * C - sigma * w * t1 * S, dw * S + w * t1 * C};
  out.ddp = {ddg, ddw * C - 2 * sigma * dw * t1 * S - sigma * w * t2 * S - sigma * w * t1 * t1 * C,
             ddw * S + 2 * dw * t1 * C + w * t2 * C - sigma * w * t1 * t1 * S};
  return out;
}

NodalSpline<1> height_interpolant(const std::vector<double>& s, const std::vector<double>& g) {
  std::vector<std::array<double, 1>> v;
  v.reserve(g.size());
  for (double x : g) v.push_back({x});
  return NodalSpline<1>(s, std::move(v));
}

struct HeightJet {
  double g, dg, ddg;
};

HeightJet height_at(const NodalSpline<1>& sp, double s) {
  geometry::Jet j = sp(geometry::Jet::variable(s, 0))[0];
  return {j.v, j.d[0], j.hess(0, 0)};
}

}  // namespace

ProfileCurve reconstruct_on_spaceform(const HeightFunction& h, double k, const ReconstructOptions& opts) {
  if (h.samples.size() < NodalSpline<1>::kStencil)
    throw ProfileError("height function needs at least six samples");
  ProfileCurve curve;
  curve.k = k;
  curve.eps0 = k < 0 ? 1 : 0;
  curve.eta = k < 0 ? std::array<double, 3>{1, -1, 1} : std::array<double, 3>{1, 1, 1};
  auto fail = [&](const std::string& why) {
    curve.truncated = true;
    curve.flag = why;
    return curve;
  };

  const auto& x = h.samples;
  std::vector<double> s(x.size()), g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = x[i].s;
    g[i] = x[i].g;
  }
  NodalSpline<1> sp = height_interpolant(s, g);
  auto frame = [&](double at) -> std::variant<std::pair<HeightJet, Local>, std::string> {
    HeightJet hj = height_at(sp, at);
    auto l = local_frame(k, hj.g, hj.dg, hj.ddg, at, opts);
    if (auto* why = std::get_if<std::string>(&l)) return *why;
    return std::pair{hj, std::get<Local>(l)};
  };

  // Three-point Gauss-Legendre nodes and weights on [-1, 1].
  const double gx = std::sqrt(0.6);
  const double nodes[3] = {-gx, 0, gx};
  const double weights[3] = {5.0 / 9, 8.0 / 9, 5.0 / 9};

  double th = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) {
      double a = s[i - 1], b = s[i];
      double sum = 0;
      for (int q = 0; q < 3; ++q) {
        auto f = frame(0.5 * (a + b) + 0.5 * (b - a) * nodes[q]);
        if (auto* why = std::get_if<std::string>(&f)) return fail(*why);
        sum += weights[q] * std::get<0>(f).second.dth;
      }
      th += 0.5 * (b - a) * sum;
    }
    auto f = frame(s[i]);
    if (auto* why = std::get_if<std::string>(&f)) return fail(*why);
    auto [hj, l] = std::get<0>(f);
    curve.samples.push_back(assemble(k, s[i], hj.g, hj.dg, hj.ddg, l, th));
  }
  return curve;
}

ProfileEvaluator::ProfileEvaluator(const ProfileCurve& curve) : k_(curve.k) {
  std::vector<double> s;
  std::vector<std::array<double, 1>> g;
  std::vector<HermiteSpline<1>::Node> th;
  for (const auto& x : curve.samples) {
    s.push_back(x.s);
    g.push_back({x.p[0]});
    th.push_back({x.s, {x.theta}, {x.dtheta}, {x.ddtheta}});
  }
  height_ = NodalSpline<1>(std::move(s), std::move(g));
  angle_ = HermiteSpline<1>(std::move(th));
}

HermiteSpline<3> ProfileCurve::spline() const {
  std::vector<HermiteSpline<3>::Node> nodes;
  nodes.reserve(samples.size());
  for (const auto& s : samples) nodes.push_back({s.s, s.p, s.dp, s.ddp});
  return HermiteSpline<3>(std::move(nodes));
}

ProfileInvariants profile_invariants(const ProfileCurve& curve, const HeightFunction& h) {
  ProfileInvariants inv;
  std::size_t n = curve.samples.size();
  std::array<std::vector<double>, 3> p, dp;
  for (int k = 0; k < 3; ++k) {
    p[k].resize(n);
    dp[k].resize(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) {
      p[k][i] = curve.samples[i].p[k];
      dp[k][i] = curve.samples[i].dp[k];
    }
    if (i < h.samples.size()) inv.height = std::max(inv.height, std::fabs(curve.samples[i].p[0] - h.samples[i].g));
  }
  const auto& kern = simd::kernels();
  const double* pc[3] = {p[0].data(), p[1].data(), p[2].data()};
  const double* dc[3] = {dp[0].data(), dp[1].data(), dp[2].data()};
  if (curve.k != 0) inv.quadric = kern.max_quadric_residual(pc, curve.eta.data(), 3, 1 / curve.k, n);
  inv.unit_speed = kern.max_quadric_residual(dc, curve.eta.data(), 3, 1.0, n);
  return inv;
}

}  // namespace minhyp::profile
