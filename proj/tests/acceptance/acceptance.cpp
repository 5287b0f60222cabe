#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "minhyp/cli/commands.hpp"
#include "minhyp/geometry/pair.hpp"
#include "minhyp/verify/runner.hpp"

using namespace minhyp;
using geometry::PairCase;
using geometry::PairParams;

namespace {

// Pinned thresholds.
constexpr double kSuiteSeconds = 300;
constexpr double kCatenarySeconds = 120;
constexpr double kMinimal = 1e-5;
constexpr double kMetric = 1e-6;
constexpr double kRelation = 1e-5;
constexpr double kOrder = 3.5;
constexpr double kRuling = 1e-8;
constexpr double kMuMu3 = 1e-5;
constexpr double kUmbilicMetric = 1e-8;
constexpr double kMuSquared = 1e-6;
constexpr int kEvalPoints = 20;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool starts_with(const std::string& s, std::string_view p) { return s.rfind(p, 0) == 0; }

bool in_suite(const std::string& n) {
  return !starts_with(n, "resultant.") && !starts_with(n, "golden.") && !starts_with(n, "curvature.");
}

geometry::DualPairOptions options(const PairParams& p) {
  geometry::DualPairOptions o;
  o.kind = p.kind;
  o.c = p.c;
  o.ct = p.ct;
  o.grid = {20, 10, 10};
  return o;
}

double value(const geometry::DualPairReport& r, std::string_view name) {
  const auto* m = r.find(name);
  return m ? m->value : std::nan("");
}

void report(int n, const std::string& title, Outcome& o) {
  std::printf("criterion %d %s: %s%s\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool all = true;
  auto finish = [&](int n, const std::string& title, Outcome& o) {
    report(n, title, o);
    all = all && o.pass;
  };

  // One run of the full suite feeds criteria 1, 2, 3 and 7.
  verify::RunOptions ro;
  verify::VerificationReport vr;
  double suite_s = 0;
  std::string suite_error;
  try {
    auto t0 = std::chrono::steady_clock::now();
    vr = verify::run_all(ro);
    suite_s = seconds_since(t0);
  } catch (const std::exception& e) {
    suite_error = e.what();
  }

  {
    Outcome o;
    o.require(suite_error.empty(), suite_error);
    std::size_t n = 0, proved = 0;
    for (const auto& r : vr.results)
      if (in_suite(r.name)) {
        ++n;
        if (r.status == verify::Status::proved) ++proved;
        else o.require(false, r.name + " " + verify::status_label(r));
      }
    o.require(n > 0, "no certificates ran");
    o.require(suite_s < kSuiteSeconds, "runtime");
    o.detail << " " << proved << "/" << n << " certificates proved, full run " << suite_s << " s";
    finish(1, "symbolic certificate suite", o);
  }

  {
    Outcome o;
    o.require(suite_error.empty(), suite_error);
    std::size_t n = 0;
    for (const auto& r : vr.results)
      if (starts_with(r.name, "resultant.") || starts_with(r.name, "golden.")) {
        ++n;
        o.require(r.status == verify::Status::proved, r.name + " " + verify::status_label(r));
        if (r.name.ends_with(".nonzero"))
          o.require(r.kind == verify::ClaimKind::nonzero, r.name + " is not a nonzero claim");
      }
    o.require(n == 6, "expected 6 resultant records, got " + std::to_string(n));
    o.detail << " " << n << " resultant records";
    finish(2, "resultants are nonzero polynomials", o);
  }

  {
    Outcome o;
    o.require(suite_error.empty(), suite_error);
    std::size_t n = 0;
    for (const auto& r : vr.results)
      if (starts_with(r.name, "curvature.")) {
        ++n;
        o.require(r.status == verify::Status::proved, r.name + " " + verify::status_label(r));
      }
    o.require(n == 10, "expected 10 curvature certificates, got " + std::to_string(n));
    o.detail << " " << n << " eliminations";
    finish(3, "principal-curvature eliminations", o);
  }

  {
    Outcome o;
    try {
      auto t0 = std::chrono::steady_clock::now();
      PairParams p;
      p.kind = PairCase::catenary;
      p.c = 1;
      p.ct = 0;
      p.r = 1;
      p.delta = 1;
      p.step = 1e-3;
      auto b = geometry::build_pair(p);
      auto r = geometry::check_dual_pair(b.f, b.ft, options(p));
      double sum = value(r, "f_sum_lambda"), pattern = value(r, "f_lambda3_plus_2lambda");
      double metric = value(r, "metric_deviation"), relation = value(r, "ft_dual_relation");
      o.require(sum <= kMinimal, "sum lambda");
      o.require(pattern <= kMinimal, "lambda3 + 2 lambda");
      o.require(metric <= kMetric, "metric deviation");
      o.require(relation <= kRelation, "dual relation");
      auto conv = geometry::catenary_convergence(p, geometry::kConvergenceSteps);
      o.require(conv.ode_order >= kOrder, "ode order");
      o.require(conv.lambda_order >= kOrder, "sum lambda order");
      o.require(conv.relation_order >= kOrder, "dual relation order");
      double s = seconds_since(t0);
      o.require(s < kCatenarySeconds, "runtime");
      o.detail << " sum " << sum << ", pattern " << pattern << ", metric " << metric << ", relation " << relation
               << ", orders " << conv.ode_order << "/" << conv.lambda_order << "/" << conv.relation_order << ", " << s
               << " s";
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    finish(4, "catenary pair (1, 0)", o);
  }

  {
    Outcome o;
    try {
      PairParams p;
      p.kind = PairCase::cone;
      p.c = 1;
      p.ct = 0;
      auto b = geometry::build_pair(p);
      auto r = geometry::check_dual_pair(b.f, b.ft, options(p));
      double ruling = value(r, "f_ruling_curvature"), mm = value(r, "ft_mu_mu3_defect");
      o.require(ruling <= kRuling, "ruling curvature");
      o.require(mm <= kMuMu3, "c - ct - mu mu3");
      o.detail << " ruling " << ruling << ", mu mu3 defect " << mm;
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    bool obstructed = false;
    try {
      PairParams q;
      q.kind = PairCase::cone;
      q.c = 0;
      q.ct = 1;
      geometry::build_pair(q);
    } catch (const geometry::ObstructionError&) {
      obstructed = true;
    } catch (const std::exception&) {
    }
    o.require(obstructed, "c <= ct not obstructed");
    auto out = std::filesystem::temp_directory_path() / "minhyp_acceptance";
    cli::RunConfig cfg;
    cfg.set("out", out.string());
    cfg.set("mode", "cone");
    cfg.set("c", "0");
    cfg.set("ctilde", "1");
    std::ostringstream so, se;
    int code = cli::run_command("check-pair", cfg, {so, se});
    o.require(code == cli::Exit::obstruction, "exit " + std::to_string(code));
    std::filesystem::remove_all(out);
    o.detail << ", c <= ct exit " << code;
    finish(5, "generalized cone pair", o);
  }

  {
    Outcome o;
    try {
      PairParams p;
      p.kind = PairCase::umbilic;
      p.c = 1;
      p.ct = 0;
      auto b = geometry::build_pair(p);
      auto r = geometry::check_dual_pair(b.f, b.ft, options(p));
      double metric = value(r, "metric_deviation"), mu = value(r, "ft_mu_squared_defect");
      o.require(metric <= kUmbilicMetric, "metric deviation");
      o.require(mu <= kMuSquared, "mu^2 = c - ct");
      o.detail << " metric " << metric << ", mu^2 defect " << mu;
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    finish(6, "totally geodesic and umbilic pair", o);
  }

  {
    Outcome o;
    o.require(suite_error.empty(), suite_error);
    std::size_t checked = 0;
    for (const auto& r : vr.results) {
      if (starts_with(r.name, "fixture.") || starts_with(r.name, "golden.")) continue;
      ++checked;
      o.require(r.status != verify::Status::engine_fault, r.name + " engine fault");
      if (r.kind == verify::ClaimKind::equal)
        o.require(r.eval_points == kEvalPoints, r.name + " evaluated at " + std::to_string(r.eval_points));
    }
    o.require(vr.count(verify::Status::engine_fault) == 0, "engine faults present");
    o.detail << " " << checked << " certificates, " << kEvalPoints << " rational points each";
    finish(7, "evaluation and symbolic paths agree", o);
  }

  return all ? 0 : 1;
}
