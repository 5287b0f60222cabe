#include <algorithm>
#include <cmath>
#include <sstream>

#include "minhyp/geometry/jet.hpp"
#include "minhyp/profile/profile.hpp"

namespace minhyp::profile {

namespace {

void validate(const CatenaryParams& p, double s0, double s1, double step, const IntegrateOptions& opts) {
  if (p.delta < -1 || p.delta > 1) throw ProfileError("delta must be -1, 0 or 1");
  if (!(step > 0)) throw ProfileError("step must be positive");
  if (!(s1 > s0)) throw ProfileError("integration interval is empty");
  if (!(std::fabs(p.gamma0) > opts.floor)) throw ProfileError("singular start: gamma(0) is zero");
}

std::size_t step_count(double s0, double s1, double step) {
  return std::max<std::size_t>(1, std::size_t(std::llround((s1 - s0) / step)));
}

std::string where(double s) {
  std::ostringstream os;
  os.precision(10);
  os << s;
  return os.str();
}

}  // namespace

double catenary_rhs(const CatenaryParams& p, double g, double dg) {
  double rterm = p.form == CatenaryForm::quadratic ? g * g : g;
  return (2.0 * p.delta - 3.0 * p.r * rterm - 2.0 * dg * dg) / g;
}

double catenary_residual(const CatenaryParams& p, double g, double dg, double ddg) {
  double rterm = p.form == CatenaryForm::quadratic ? g * g : g;
  return g * ddg + 3.0 * p.r * rterm + 2.0 * dg * dg - 2.0 * p.delta;
}

HeightSample HeightFunction::at(double s) const {
  if (samples.size() < 2) throw ProfileError("height function has fewer than two samples");
  auto it = std::upper_bound(samples.begin(), samples.end(), s,
                             [](double x, const HeightSample& n) { return x < n.s; });
  std::size_t i = it == samples.begin() ? 0 : std::size_t(it - samples.begin()) - 1;
  i = std::min(i, samples.size() - 2);
  const auto& a = samples[i];
  const auto& b = samples[i + 1];
  std::vector<HermiteSpline<1>::Node> nodes{{a.s, {a.g}, {a.dg}, {a.ddg}}, {b.s, {b.g}, {b.dg}, {b.ddg}}};
  HermiteSpline<1> seg(std::move(nodes));
  geometry::Jet j = seg(geometry::Jet::variable(s, 0))[0];
  return {s, j.v, j.d[0], j.hess(0, 0)};
}

HeightFunction integrate_catenary(const CatenaryParams& p, double s0, double s1, double step,
                                  const IntegrateOptions& opts) {
  validate(p, s0, s1, step, opts);
  std::size_t n = step_count(s0, s1, step);
  double h = (s1 - s0) / double(n);
  HeightFunction out;
  out.step = h;
  out.samples.reserve(n + 1);
  double g = p.gamma0, dg = p.dgamma0;
  out.samples.push_back({s0, g, dg, catenary_rhs(p, g, dg)});
  auto f = [&](double y, double dy) { return catenary_rhs(p, y, dy); };
  for (std::size_t i = 0; i < n; ++i) {
    double k1g = dg, k1d = f(g, dg);
    double k2g = dg + 0.5 * h * k1d, k2d = f(g + 0.5 * h * k1g, dg + 0.5 * h * k1d);
    double k3g = dg + 0.5 * h * k2d, k3d = f(g + 0.5 * h * k2g, dg + 0.5 * h * k2d);
    double k4g = dg + h * k3d, k4d = f(g + h * k3g, dg + h * k3d);
    double ng = g + h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    double nd = dg + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    double s = s0 + double(i + 1) * h;
    if (!std::isfinite(ng) || !std::isfinite(nd) || std::fabs(ng) < opts.floor) {
      out.truncated = true;
      out.flag = "height function reached the singular floor near s = " + where(s);
      break;
    }
    g = ng;
    dg = nd;
    out.samples.push_back({s, g, dg, catenary_rhs(p, g, dg)});
  }
  return out;
}

double a_posteriori_residual(const CatenaryParams& p, const HeightFunction& h) {
  const auto& x = h.samples;
  double worst = 0;
  for (std::size_t i = 2; i + 2 < x.size(); ++i) {
    double ddg = (-x[i + 2].dg + 8.0 * x[i + 1].dg - 8.0 * x[i - 1].dg + x[i - 2].dg) / (12.0 * h.step);
    worst = std::max(worst, std::fabs(catenary_residual(p, x[i].g, x[i].dg, ddg)));
  }
  return worst;
}

RichardsonReport richardson_check(const CatenaryParams& p, double s0, double s1, double step) {
  HeightFunction a = integrate_catenary(p, s0, s1, step);
  HeightFunction b = integrate_catenary(p, s0, s1, step / 2);
  HeightFunction c = integrate_catenary(p, s0, s1, step / 4);
  if (a.truncated || b.truncated || c.truncated) throw ProfileError("Richardson check needs untruncated solutions");
  RichardsonReport r;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    r.diff_h = std::max(r.diff_h, std::fabs(a.samples[i].g - b.samples[2 * i].g));
    r.diff_h2 = std::max(r.diff_h2, std::fabs(b.samples[2 * i].g - c.samples[4 * i].g));
  }
  r.order = r.diff_h2 > 0 ? std::log2(r.diff_h / r.diff_h2) : 0;
  r.estimate = r.diff_h2 / 15.0;
  return r;
}

}  // namespace minhyp::profile
