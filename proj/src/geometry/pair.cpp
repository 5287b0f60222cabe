#include "minhyp/geometry/pair.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "minhyp/geometry/forms.hpp"

namespace minhyp::geometry {

namespace {

double scale_for(double c) { return c > 0 ? 1 / std::sqrt(c) : 1.0; }

profile::ProfileCurve dual_profile(const profile::HeightFunction& h, double ct) {
  auto curve = profile::reconstruct_on_spaceform(h, ct);
  if (curve.truncated) throw ObstructionError("dual profile in Q^2(" + std::to_string(ct) + "): " + curve.flag);
  return curve;
}

}  // namespace

double fitted_order(const std::vector<ConvergenceRow>& rows, double ConvergenceRow::*field) {
  if (rows.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double n = double(rows.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    double x = std::log(r.step), y = std::log(r.*field);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

PairBuild build_pair(const PairParams& p) {
  if (!std::isfinite(p.c) || !std::isfinite(p.ct)) throw std::invalid_argument("curvatures must be finite");
  if (p.c == p.ct) throw std::invalid_argument("the pair needs c != ct");
  if (!(p.step > 0)) throw std::invalid_argument("step must be positive");
  if (p.kind != PairCase::catenary && p.c <= p.ct)
    throw ObstructionError("this case is admitted only for c > ct (got c = " + std::to_string(p.c) +
                           ", ct = " + std::to_string(p.ct) + ")");
  const double unit = scale_for(p.c);
  auto model_f = SpaceFormModel::make(p.c);
  auto model_t = SpaceFormModel::make(p.ct);

  switch (p.kind) {
    case PairCase::catenary: {
      profile::CatenaryParams cp{p.r.value_or(p.c), p.delta, p.gamma0, p.dgamma0, p.form};
      double s0 = p.s0.value_or(0.0);
      double len = p.length.value_or(1.0);
      auto h = profile::integrate_catenary(cp, s0, s0 + len, p.step);
      if (h.truncated) throw profile::ProfileError("height function truncated: " + h.flag);
      auto pf = profile::reconstruct_on_spaceform(h, p.c);
      if (pf.truncated) throw profile::ProfileError("profile of f is inadmissible: " + pf.flag);
      auto pt = dual_profile(h, p.ct);
      auto f = rotation_hypersurface(pf, model_f, "f");
      auto ft = rotation_hypersurface(pt, model_t, "f_dual");
      return {std::move(h), std::move(pf), std::move(pt), std::move(f), std::move(ft)};
    }
    case PairCase::umbilic: {
      double s0 = p.s0.value_or(0.2 * unit);
      double len = p.length.value_or(1.2 * unit);
      double b = p.c == 0 ? 1.0 : 1 / std::sqrt(std::fabs(p.c));
      auto h = profile::helix_height(p.c, 0, b).sample(s0, s0 + len, p.step);
      auto pf = profile::reconstruct_on_spaceform(h, p.c);
      if (pf.truncated) throw profile::ProfileError("profile of f is inadmissible: " + pf.flag);
      auto pt = dual_profile(h, p.ct);
      auto f = rotation_hypersurface(pf, model_f, "f");
      auto ft = rotation_hypersurface(pt, model_t, "f_dual");
      return {std::move(h), std::move(pf), std::move(pt), std::move(f), std::move(ft)};
    }
    case PairCase::cone: {
      double s0 = p.s0.value_or(0.0);
      double len = p.length.value_or(1.2 * unit);
      double cbar = p.cbar.value_or(p.c > 0 ? p.c : 1.0);
      auto h = profile::helix_height(p.c, p.helix_a, p.helix_b).sample(s0, s0 + len, p.step);
      auto pt = dual_profile(h, p.ct);
      auto f = generalized_cone(MinimalBase::clifford_torus, model_f, cbar, -p.t_half * unit, p.t_half * unit, "f");
      auto ft = rotation_hypersurface(pt, model_t, "f_dual");
      return {std::move(h), std::nullopt, std::move(pt), std::move(f), std::move(ft)};
    }
  }
  throw std::invalid_argument("unknown pair case");
}

double rotation_metric_deviation(const HypersurfacePatch& rot, const profile::ProfileCurve& prof,
                                 const std::vector<Coords>& points) {
  profile::ProfileEvaluator spline(prof);
  double worst = 0;
  for (const auto& u : points) {
    ChartJet j = chart_jet(rot, u);
    double b = spline(u[0])[0];
    double st = std::sin(u[1]);
    Mat3 expect{};
    expect[0][0] = 1;
    expect[1][1] = b * b;
    expect[2][2] = b * b * st * st;
    double scale = std::max(1.0, b * b);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::fabs(rot.model.inner(j.d[i], j.d[k]) - expect[i][k]) / scale);
  }
  return worst;
}

ConvergenceTable catenary_convergence(const PairParams& p, const std::vector<double>& steps,
                                      std::array<int, 3> grid) {
  ConvergenceTable t;
  for (double step : steps) {
    PairParams q = p;
    q.kind = PairCase::catenary;
    q.step = step;
    auto build = build_pair(q);
    profile::CatenaryParams cp{q.r.value_or(q.c), q.delta, q.gamma0, q.dgamma0, q.form};
    DualPairOptions o;
    o.kind = PairCase::catenary;
    o.c = q.c;
    o.ct = q.ct;
    o.grid = grid;
    auto rep = check_dual_pair(build.f, build.ft, o);
    ConvergenceRow row;
    row.step = build.height.step;
    row.ode_residual = profile::a_posteriori_residual(cp, build.height);
    row.sum_lambda = rep.find("f_sum_lambda")->value;
    row.relation = rep.find("ft_dual_relation")->value;
    t.rows.push_back(row);
  }
  t.ode_order = fitted_order(t.rows, &ConvergenceRow::ode_residual);
  t.lambda_order = fitted_order(t.rows, &ConvergenceRow::sum_lambda);
  t.relation_order = fitted_order(t.rows, &ConvergenceRow::relation);
  return t;
}

}  // namespace minhyp::geometry
