#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "minhyp/geometry/forms.hpp"
#include "minhyp/geometry/obj.hpp"
#include "minhyp/geometry/pair.hpp"

using namespace minhyp::geometry;
using minhyp::profile::ProfileError;

namespace {

// Sphere of radius sin(rho) at height cos(rho) in the unit 4-sphere.
HypersurfacePatch small_sphere(double rho) {
  auto chart = make_chart([rho](const auto& u) {
    using T = std::decay_t<decltype(u[0])>;
    using std::cos;
    using std::sin;
    double R = std::sin(rho);
    return std::vector<T>{R * cos(u[0]), R * sin(u[0]) * cos(u[1]), R * sin(u[0]) * sin(u[1]) * cos(u[2]),
                          R * sin(u[0]) * sin(u[1]) * sin(u[2]), T(std::cos(rho))};
  });
  return {"sphere", SpaceFormModel::make(1), chart, {0.4, 0.4, 0.1}, {2.6, 2.6, 6.0}};
}

DualPairOptions options_for(const PairParams& p, std::array<int, 3> grid = {8, 4, 4}) {
  DualPairOptions o;
  o.kind = p.kind;
  o.c = p.c;
  o.ct = p.ct;
  o.grid = grid;
  return o;
}

double measure(const DualPairReport& r, std::string_view name) {
  const Measure* m = r.find(name);
  REQUIRE(m != nullptr);
  return m->value;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("space form models") {
    auto s = SpaceFormModel::make(1);
    CHECK(s.dim() == 5);
    CHECK(s.time_axis() == -1);
    auto h = SpaceFormModel::make(-1);
    CHECK(h.dim() == 5);
    CHECK(h.time_axis() == 3);
    CHECK(h.eta()[3] == -1);
    auto e = SpaceFormModel::make(0);
    CHECK(e.dim() == 4);
    std::vector<double> x{0, 0, 0, std::sqrt(2.0), 1};
    CHECK(h.quadric_residual(x) == doctest::Approx(0).epsilon(1e-15));
  }

  TEST_CASE("jet arithmetic matches analytic derivatives") {
    Jet x = Jet::variable(0.7, 0), y = Jet::variable(-0.3, 1);
    Jet f = sin(x) * y + x * x / (Jet(2.0) + y);
    double X = 0.7, Y = -0.3;
    CHECK(f.v == doctest::Approx(std::sin(X) * Y + X * X / (2 + Y)));
    CHECK(f.d[0] == doctest::Approx(std::cos(X) * Y + 2 * X / (2 + Y)));
    CHECK(f.d[1] == doctest::Approx(std::sin(X) - X * X / ((2 + Y) * (2 + Y))));
    CHECK(f.hess(0, 0) == doctest::Approx(-std::sin(X) * Y + 2 / (2 + Y)));
    CHECK(f.hess(0, 1) == doctest::Approx(std::cos(X) - 2 * X / ((2 + Y) * (2 + Y))));
    CHECK(f.hess(1, 1) == doctest::Approx(2 * X * X / std::pow(2 + Y, 3)));
    CHECK(f.d[2] == 0);
  }

  TEST_CASE("principal curvatures of diagonal forms") {
    Mat3 I{{{1, 0, 0}, {0, 4, 0}, {0, 0, 9}}};
    Mat3 II{{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}};
    auto p = principal_curvatures(I, II);
    CHECK(p.lambda[0] == doctest::Approx(1.0 / 3));
    CHECK(p.lambda[1] == doctest::Approx(0.5));
    CHECK(p.lambda[2] == doctest::Approx(1.0));
    CHECK(p.H == doctest::Approx(1 + 0.5 + 1.0 / 3));
    Mat3 bad{{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
    CHECK_THROWS_AS(principal_curvatures(bad, II), GeometryError);
  }

  TEST_CASE("double root detection") {
    PrincipalData p;
    p.lambda = {-1, -1, 2};
    auto d = double_root(p);
    REQUIRE(d);
    CHECK(d->mu == -1);
    CHECK(d->mu3 == 2);
    p.lambda = {-1, 0.5, 2};
    CHECK_FALSE(double_root(p));
    p.lambda = {3, 3, 3};
    REQUIRE(double_root(p));
    CHECK(double_root(p)->mu3 == 3);
  }

  TEST_CASE("small spheres are umbilic with the Gauss equation") {
    for (double rho : {std::numbers::pi / 2, 1.0, 0.6}) {
      CAPTURE(rho);
      auto patch = small_sphere(rho);
      for (const auto& u : interior_grid(patch, 3, 2, 2)) {
        auto ff = fundamental_forms(patch, u);
        CHECK(ff.normal_defect <= 1e-12);
        auto p = principal_curvatures(ff);
        double lam = 1 / std::tan(rho);
        for (double l : p.lambda) CHECK(std::fabs(std::fabs(l) - lam) <= 1e-10);
        CHECK(gauss_residual(patch, u, 1e-3) <= 1e-5);
      }
    }
  }

  TEST_CASE("jet and central-difference derivatives agree") {
    auto patch = small_sphere(1.0);
    Coords u{1.1, 0.9, 2.0};
    auto a = chart_jet(patch, u, Derivatives::jet);
    auto b = chart_jet(patch, u, Derivatives::central);
    for (int i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < a.x.size(); ++k) {
        CHECK(a.d[i][k] == doctest::Approx(b.d[i][k]).epsilon(1e-7));
        for (int j = 0; j < 3; ++j) CHECK(std::fabs(a.dd[i][j][k] - b.dd[i][j][k]) <= 1e-5);
      }
  }

  TEST_CASE("catenary pair is minimal with matching metrics") {
    for (auto [c, ct] : {std::pair{1.0, 0.0}, std::pair{-1.0, -2.0}, std::pair{0.0, -1.0}}) {
      CAPTURE(c);
      PairParams p;
      p.kind = PairCase::catenary;
      p.c = c;
      p.ct = ct;
      auto b = build_pair(p);
      auto r = check_dual_pair(b.f, b.ft, options_for(p));
      for (const auto& m : r.measures) {
        CAPTURE(m.name);
        CHECK(m.passed());
      }
      CHECK(measure(r, "f_sum_lambda") <= 1e-8);
    }
    PairParams leaves;
    leaves.c = -1;
    leaves.ct = 0;
    CHECK_THROWS_AS(build_pair(leaves), ObstructionError);
  }

  TEST_CASE("the printed catenary form is not minimal for r != 0") {
    PairParams p;
    p.kind = PairCase::catenary;
    p.form = minhyp::profile::CatenaryForm::printed;
    auto b = build_pair(p);
    auto r = check_dual_pair(b.f, b.ft, options_for(p));
    CHECK(measure(r, "f_sum_lambda") > 1e-2);
  }

  TEST_CASE("umbilic pair") {
    PairParams p;
    p.kind = PairCase::umbilic;
    p.c = 1;
    p.ct = 0;
    auto b = build_pair(p);
    auto r = check_dual_pair(b.f, b.ft, options_for(p));
    CHECK(r.passed());
    CHECK(measure(r, "metric_deviation") <= 1e-8);
    CHECK(measure(r, "ft_mu_squared_defect") <= 1e-6);
    CHECK(measure(r, "f_max_abs_lambda") <= 1e-10);
  }

  TEST_CASE("cone pair") {
    PairParams p;
    p.kind = PairCase::cone;
    p.c = 1;
    p.ct = 0;
    auto b = build_pair(p);
    CHECK_FALSE(b.profile_f);
    auto r = check_dual_pair(b.f, b.ft, options_for(p));
    CHECK(r.passed());
    CHECK(measure(r, "f_ruling_curvature") <= 1e-8);
    CHECK(measure(r, "ft_mu_mu3_defect") <= 1e-5);
    CHECK(r.find("metric_deviation") == nullptr);
    CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("obstructions and invalid parameters") {
    for (auto kind : {PairCase::umbilic, PairCase::cone})
      for (auto [c, ct] : {std::pair{0.0, 1.0}, std::pair{-1.0, 0.0}, std::pair{1.0, 2.0}}) {
        PairParams p;
        p.kind = kind;
        p.c = c;
        p.ct = ct;
        CHECK_THROWS_AS(build_pair(p), ObstructionError);
      }
    PairParams same;
    same.c = same.ct = 1;
    CHECK_THROWS_AS(build_pair(same), std::invalid_argument);
    PairParams cone;
    cone.kind = PairCase::cone;
    cone.cbar = 0.5;
    CHECK_THROWS_AS(build_pair(cone), std::invalid_argument);
    PairParams trunc;
    trunc.delta = -1;
    trunc.length = 5;
    CHECK_THROWS_AS(build_pair(trunc), ProfileError);
  }

  TEST_CASE("catenary convergence orders") {
    PairParams p;
    auto t = catenary_convergence(p, kConvergenceSteps);
    REQUIRE(t.rows.size() == kConvergenceSteps.size());
    CHECK(t.ode_order >= 3.5);
    CHECK(t.lambda_order >= 3.5);
    CHECK(t.relation_order >= 3.5);
    std::vector<ConvergenceRow> exact{{0.1, 1e-4, 1, 1}, {0.05, 6.25e-6, 1, 1}};
    CHECK(fitted_order(exact, &ConvergenceRow::ode_residual) == doctest::Approx(4));
    CHECK(std::isnan(fitted_order({}, &ConvergenceRow::relation)));
  }

  TEST_CASE("pair checks do not depend on the thread count") {
    PairParams p;
    auto b = build_pair(p);
    auto o = options_for(p);
    o.threads = 1;
    auto a = check_dual_pair(b.f, b.ft, o);
    o.threads = 3;
    auto c = check_dual_pair(b.f, b.ft, o);
    REQUIRE(a.measures.size() == c.measures.size());
    for (std::size_t i = 0; i < a.measures.size(); ++i) {
      CHECK(a.measures[i].name == c.measures[i].name);
      CHECK(std::memcmp(&a.measures[i].value, &c.measures[i].value, sizeof(double)) == 0);
    }
  }

  TEST_CASE("warped metric of a rotation patch") {
    PairParams p;
    auto b = build_pair(p);
    REQUIRE(b.profile_f);
    CHECK(rotation_metric_deviation(b.f, *b.profile_f, interior_grid(b.f, 5, 3, 3)) <= 1e-8);
  }

  TEST_CASE("obj export layout") {
    auto patch = small_sphere(1.0);
    std::ostringstream os;
    write_obj(os, patch, 4, 3, 2);
    std::istringstream is(os.str());
    std::string line;
    int v = 0, f = 0, o = 0;
    while (std::getline(is, line)) {
      if (line.rfind("v ", 0) == 0) ++v;
      if (line.rfind("f ", 0) == 0) ++f;
      if (line == "o sphere") ++o;
    }
    CHECK(o == 1);
    CHECK(v == 4 * 3 * 2);
    CHECK(f == 3 * 2 * 2);
    auto pr = project_to_r3(SpaceFormModel::make(1), {1, 0, 0, 0, 0});
    CHECK(pr == std::array<double, 3>{1, 0, 0});
  }
}
