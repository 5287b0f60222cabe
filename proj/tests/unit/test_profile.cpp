#include <doctest.h>

#include <cmath>
#include <sstream>

#include "minhyp/geometry/jet.hpp"
#include "minhyp/profile/profile.hpp"

using namespace minhyp::profile;
using minhyp::geometry::Jet;

namespace {

CatenaryParams default_catenary() {
  CatenaryParams p;
  p.r = 1;
  p.delta = 1;
  p.gamma0 = 0.5;
  p.dgamma0 = 0;
  return p;
}

// g'^2 = delta - r g^2 + C / g^4 integrates g g'' + 3 r g^2 + 2 g'^2 - 2 delta = 0.
double first_integral_defect(const CatenaryParams& p, const HeightSample& s) {
  double g4 = std::pow(p.gamma0, 4);
  double C = (p.dgamma0 * p.dgamma0 - p.delta + p.r * p.gamma0 * p.gamma0) * g4;
  return std::fabs(s.dg * s.dg - (p.delta - p.r * s.g * s.g + C / std::pow(s.g, 4)));
}

}  // namespace

TEST_SUITE("profile") {
  TEST_CASE("catenary equation forms") {
    CatenaryParams q = default_catenary();
    CatenaryParams pr = q;
    pr.form = CatenaryForm::printed;
    for (double g : {0.3, 0.5, 0.9})
      for (double dg : {-0.4, 0.0, 0.7}) {
        CHECK(catenary_residual(q, g, dg, catenary_rhs(q, g, dg)) == doctest::Approx(0).epsilon(1e-14));
        CHECK(catenary_residual(pr, g, dg, 0) - catenary_residual(q, g, dg, 0) ==
              doctest::Approx(3 * q.r * (g - g * g)).epsilon(1e-12));
      }
    q.r = 0;
    pr.r = 0;
    CHECK(catenary_rhs(q, 0.4, 0.2) == catenary_rhs(pr, 0.4, 0.2));
  }

  TEST_CASE("catenary integration matches the first integral") {
    CatenaryParams p = default_catenary();
    CHECK(std::pow(p.gamma0, 4) * (p.r * p.gamma0 * p.gamma0 - p.delta) == doctest::Approx(-0.046875));
    HeightFunction h = integrate_catenary(p, 0, 1, 1e-3);
    REQUIRE_FALSE(h.truncated);
    CHECK(h.samples.size() == 1001);
    double worst = 0;
    for (const auto& s : h.samples) worst = std::max(worst, first_integral_defect(p, s));
    CHECK(worst <= 1e-10);
    CHECK(a_posteriori_residual(p, h) <= 1e-8);
  }

  TEST_CASE("catenary integration is fourth order") {
    auto r = richardson_check(default_catenary(), 0, 1, 0.02);
    CHECK(r.order >= 3.7);
    CHECK(r.order <= 4.3);
    CHECK(r.estimate < 1e-9);
  }

  TEST_CASE("catenary integration truncates at the floor") {
    CatenaryParams p = default_catenary();
    p.delta = -1;
    HeightFunction h = integrate_catenary(p, 0, 5, 1e-3);
    CHECK(h.truncated);
    CHECK_FALSE(h.flag.empty());
    CHECK(h.s_end() < 5);
    CHECK_THROWS_AS(integrate_catenary(p, 0, 1, -1), ProfileError);
  }

  TEST_CASE("height interpolation between samples") {
    HelixHeight hx = helix_height(1, 0, 1);
    HeightFunction h = hx.sample(0, 1, 0.01);
    for (double s : {0.0031, 0.5017, 0.9993}) {
      auto v = h.at(s);
      CHECK(v.g == doctest::Approx(std::sin(s)).epsilon(1e-12));
      CHECK(v.dg == doctest::Approx(std::cos(s)).epsilon(1e-9));
    }
  }

  TEST_CASE("helix height on the unit sphere reconstructs a meridian") {
    HeightFunction h = helix_height(1, 0, 1).sample(0, 1.2, 1e-3);
    ProfileCurve c = reconstruct_on_spaceform(h, 1);
    REQUIRE_FALSE(c.truncated);
    for (const auto& s : c.samples) {
      CHECK(s.p[0] == doctest::Approx(std::sin(s.s)).epsilon(1e-12));
      CHECK(s.p[1] == doctest::Approx(std::cos(s.s)).epsilon(1e-12));
      CHECK(std::fabs(s.p[2]) <= 1e-12);
      CHECK(s.theta == 0);
    }
  }

  TEST_CASE("reconstructions satisfy the curve invariants") {
    CatenaryParams p = default_catenary();
    HeightFunction cat = integrate_catenary(p, 0, 1, 1e-3);
    for (double k : {1.0, 0.0}) {
      CAPTURE(k);
      ProfileCurve c = reconstruct_on_spaceform(cat, k);
      REQUIRE_FALSE(c.truncated);
      auto inv = profile_invariants(c, cat);
      CHECK(inv.quadric <= 1e-12);
      CHECK(inv.unit_speed <= 1e-9);
      CHECK(inv.height == 0);
    }
    HeightFunction hyp = helix_height(-1, 0.5, 0).sample(0, 1, 1e-3);
    ProfileCurve c = reconstruct_on_spaceform(hyp, -1);
    REQUIRE_FALSE(c.truncated);
    CHECK(c.eta == std::array<double, 3>{1, -1, 1});
    auto inv = profile_invariants(c, hyp);
    CHECK(inv.quadric <= 1e-12);
    CHECK(inv.unit_speed <= 1e-9);
  }

  TEST_CASE("negative radicand truncates the reconstruction") {
    // |g'| > 1 near s = 0 in the flat model
    HeightFunction h = helix_height(0, 0, 2).sample(0, 1, 1e-2);
    ProfileCurve c = reconstruct_on_spaceform(h, 0);
    CHECK(c.truncated);
    CHECK_FALSE(c.flag.empty());
  }

  TEST_CASE("evaluator agrees with the nodes") {
    HeightFunction cat = integrate_catenary(default_catenary(), 0, 1, 1e-2);
    ProfileCurve c = reconstruct_on_spaceform(cat, 1);
    ProfileEvaluator ev(c);
    for (std::size_t i = 0; i < c.samples.size(); i += 7) {
      auto p = ev(c.samples[i].s);
      for (int k = 0; k < 3; ++k) CHECK(p[k] == doctest::Approx(c.samples[i].p[k]).epsilon(1e-12));
    }
  }

  TEST_CASE("splines reproduce low-degree polynomials") {
    auto f = [](double s) { return 1 - 2 * s + 0.5 * s * s * s - 0.25 * std::pow(s, 5); };
    auto df = [](double s) { return -2 + 1.5 * s * s - 1.25 * std::pow(s, 4); };
    auto ddf = [](double s) { return 3 * s - 5 * std::pow(s, 3); };
    std::vector<double> s;
    std::vector<std::array<double, 1>> v;
    std::vector<HermiteSpline<1>::Node> nodes;
    for (int i = 0; i <= 10; ++i) {
      double x = 0.1 * i;
      s.push_back(x);
      v.push_back({f(x)});
      nodes.push_back({x, {f(x)}, {df(x)}, {ddf(x)}});
    }
    NodalSpline<1> nodal(s, v);
    HermiteSpline<1> herm(nodes);
    for (double x : {0.013, 0.37, 0.55, 0.981}) {
      Jet j = Jet::variable(x, 0);
      Jet a = nodal(j)[0], b = herm(j)[0];
      CHECK(a.v == doctest::Approx(f(x)).epsilon(1e-13));
      CHECK(b.v == doctest::Approx(f(x)).epsilon(1e-13));
      CHECK(a.d[0] == doctest::Approx(df(x)).epsilon(1e-11));
      CHECK(b.d[0] == doctest::Approx(df(x)).epsilon(1e-11));
      CHECK(a.hess(0, 0) == doctest::Approx(ddf(x)).epsilon(1e-9));
      CHECK(b.hess(0, 0) == doctest::Approx(ddf(x)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(NodalSpline<1>({0, 1, 2}, {{0}, {1}, {2}}), std::invalid_argument);
  }

  TEST_CASE("profile csv layout") {
    HeightFunction h = helix_height(1, 0, 1).sample(0, 0.1, 0.01);
    ProfileCurve c = reconstruct_on_spaceform(h, 1);
    std::ostringstream os;
    write_profile_csv(os, c, h);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "s,gamma,dgamma,beta1,beta2,beta3");
    std::size_t rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == c.samples.size());
  }
}
