#include "minhyp/geometry/dual_pair.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "minhyp/geometry/forms.hpp"
#include "minhyp/simd/kernels.hpp"

namespace minhyp::geometry {

std::string_view to_string(PairCase k) {
  switch (k) {
    case PairCase::umbilic:
      return "umbilic";
    case PairCase::catenary:
      return "catenary";
    case PairCase::cone:
      return "cone";
  }
  return "?";
}

bool DualPairReport::passed() const {
  return std::all_of(measures.begin(), measures.end(), [](const Measure& m) { return m.passed(); });
}

const Measure* DualPairReport::find(std::string_view name) const {
  for (const auto& m : measures)
    if (m.name == name) return &m;
  return nullptr;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Sample {
  SampleRow row;
  std::array<double, 9> I_f{}, I_t{};
  std::array<double, 3> lambda_f{}, lambda_t{};
  double scale = 1;
  double quadric_f = 0, quadric_t = 0;
  double normal_f = 0, normal_t = 0;
  double ruling = kNaN;
  bool root_f = true, root_t = true;
};

Sample evaluate(const HypersurfacePatch& f, const HypersurfacePatch& ft, const Coords& u, const Coords& ut,
                const DualPairOptions& o) {
  Sample s;
  s.row.u = u;
  s.row.ut = ut;
  FundamentalForms a = fundamental_forms(f, u);
  FundamentalForms b = fundamental_forms(ft, ut);
  PrincipalData pa = principal_curvatures(a);
  PrincipalData pb = principal_curvatures(b);
  double big = 0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      s.I_f[3 * i + k] = a.I[i][k];
      s.I_t[3 * i + k] = b.I[i][k];
      big = std::max(big, std::fabs(a.I[i][k]));
    }
  s.scale = big;
  s.lambda_f = pa.lambda;
  s.lambda_t = pb.lambda;
  s.quadric_f = std::fabs(f.model.quadric_residual(a.position));
  s.quadric_t = std::fabs(ft.model.quadric_residual(b.position));
  s.normal_f = std::max(a.normal_defect, a.normal_norm_defect);
  s.normal_t = std::max(b.normal_defect, b.normal_norm_defect);

  const double dc = o.c - o.ct;
  auto rf = double_root(pa, o.rel_gap);
  auto rt = double_root(pb, o.rel_gap);
  s.row.sum_lambda = std::fabs(pa.H);
  s.row.metric = kNaN;
  s.row.lambda_pattern = kNaN;
  s.row.relation = kNaN;
  switch (o.kind) {
    case PairCase::umbilic:
      s.row.metric = 0;
      s.row.lambda_pattern = std::max(std::fabs(pa.lambda[0]), std::fabs(pa.lambda[2]));
      s.row.relation = std::max(std::fabs(pb.lambda[0] * pb.lambda[0] - dc), std::fabs(pb.lambda[2] * pb.lambda[2] - dc));
      s.root_t = bool(rt) && rt->mu == rt->mu3;
      break;
    case PairCase::catenary:
      s.row.metric = 0;
      s.root_f = bool(rf);
      s.root_t = bool(rt);
      if (rf) s.row.lambda_pattern = std::fabs(rf->mu3 + 2 * rf->mu);
      if (rt) s.row.relation = std::fabs(2 * rt->mu + rt->mu3 - 3 * dc / rt->mu);
      break;
    case PairCase::cone:
      s.root_t = bool(rt);
      s.row.lambda_pattern = std::min({std::fabs(pa.lambda[0]), std::fabs(pa.lambda[1]), std::fabs(pa.lambda[2])});
      s.ruling = std::fabs(a.II[2][2] / a.I[2][2]);
      if (rt) s.row.relation = std::fabs(rt->mu * rt->mu3 - dc);
      break;
  }
  s.row.gauss_f = gauss_residual(f, u, o.gauss_step);
  s.row.gauss_ft = gauss_residual(ft, ut, o.gauss_step);
  return s;
}

double column_max(const std::vector<Sample>& v, double Sample::*field) {
  double m = 0;
  for (const auto& s : v) {
    double x = s.*field;
    if (std::isnan(x)) return kNaN;
    m = std::max(m, x);
  }
  return m;
}

double row_max(const std::vector<Sample>& v, double SampleRow::*field) {
  double m = 0;
  for (const auto& s : v) {
    double x = s.row.*field;
    if (std::isnan(x)) return kNaN;
    m = std::max(m, x);
  }
  return m;
}

}  // namespace

DualPairReport check_dual_pair(const HypersurfacePatch& f, const HypersurfacePatch& ft, const DualPairOptions& o) {
  if (f.model.c() != o.c || ft.model.c() != o.ct) throw GeometryError("patch models do not match the options");
  if (std::any_of(o.grid.begin(), o.grid.end(), [](int n) { return n < 1; }))
    throw GeometryError("grid sizes must be positive");
  auto uf = interior_grid(f, o.grid[0], o.grid[1], o.grid[2]);
  auto ut = interior_grid(ft, o.grid[0], o.grid[1], o.grid[2]);
  const std::size_t n = uf.size();

  std::vector<Sample> samples(n);
  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < n; i = next++) samples[i] = evaluate(f, ft, uf[i], ut[i], o);
    } catch (...) {
      errors[id] = std::current_exception();
      next = n;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  DualPairReport r;
  r.kind = o.kind;
  const auto& kern = simd::kernels();
  const auto& tol = o.tol;

  std::vector<double> lf[3], If(9 * n), It(9 * n), sc(9 * n);
  for (int k = 0; k < 3; ++k) lf[k].resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) lf[k][i] = samples[i].lambda_f[k];
    for (int q = 0; q < 9; ++q) {
      If[9 * i + q] = samples[i].I_f[q];
      It[9 * i + q] = samples[i].I_t[q];
      sc[9 * i + q] = samples[i].scale;
    }
  }
  double sum_lambda = kern.max_abs_lincomb3(lf[0].data(), lf[1].data(), lf[2].data(), 1, 1, 1, n);

  auto count = [&](bool Sample::*flag) {
    return double(std::count_if(samples.begin(), samples.end(), [&](const Sample& s) { return !(s.*flag); }));
  };

  switch (o.kind) {
    case PairCase::umbilic:
    case PairCase::catenary: {
      double metric = kern.max_scaled_deviation(If.data(), It.data(), sc.data(), 9 * n);
      for (std::size_t i = 0; i < n; ++i) {
        double m = 0;
        for (int q = 0; q < 9; ++q) m = std::max(m, std::fabs(If[9 * i + q] - It[9 * i + q]) / sc[9 * i + q]);
        samples[i].row.metric = m;
      }
      r.measures.push_back({"metric_deviation", metric, tol.metric});
      if (o.kind == PairCase::umbilic) {
        r.measures.push_back({"f_max_abs_lambda", row_max(samples, &SampleRow::lambda_pattern), tol.minimal});
        r.measures.push_back({"ft_mu_squared_defect", row_max(samples, &SampleRow::relation), tol.mu_squared});
        r.measures.push_back({"ft_not_umbilic", count(&Sample::root_t), 0});
      } else {
        r.measures.push_back({"f_sum_lambda", sum_lambda, tol.minimal});
        r.measures.push_back({"f_lambda3_plus_2lambda", row_max(samples, &SampleRow::lambda_pattern), tol.minimal});
        r.measures.push_back({"ft_dual_relation", row_max(samples, &SampleRow::relation), tol.relation});
        r.measures.push_back({"f_missing_double_root", count(&Sample::root_f), 0});
        r.measures.push_back({"ft_missing_double_root", count(&Sample::root_t), 0});
      }
      break;
    }
    case PairCase::cone:
      r.measures.push_back({"f_sum_lambda", sum_lambda, tol.minimal});
      r.measures.push_back({"f_ruling_curvature", column_max(samples, &Sample::ruling), tol.ruling});
      r.measures.push_back({"f_min_abs_lambda", row_max(samples, &SampleRow::lambda_pattern), tol.ruling});
      r.measures.push_back({"ft_mu_mu3_defect", row_max(samples, &SampleRow::relation), tol.relation});
      r.measures.push_back({"ft_missing_double_root", count(&Sample::root_t), 0});
      r.notes.push_back(
          "first forms are not compared: the cone and the helix rotation carry different metrics on their orbits");
      break;
  }
  r.measures.push_back({"f_quadric", column_max(samples, &Sample::quadric_f), tol.model});
  r.measures.push_back({"ft_quadric", column_max(samples, &Sample::quadric_t), tol.model});
  r.measures.push_back({"f_normal", column_max(samples, &Sample::normal_f), tol.model});
  r.measures.push_back({"ft_normal", column_max(samples, &Sample::normal_t), tol.model});
  r.measures.push_back({"f_gauss", row_max(samples, &SampleRow::gauss_f), tol.gauss});
  r.measures.push_back({"ft_gauss", row_max(samples, &SampleRow::gauss_ft), tol.gauss});

  r.rows.reserve(n);
  for (auto& s : samples) r.rows.push_back(s.row);
  return r;
}

}  // namespace minhyp::geometry
