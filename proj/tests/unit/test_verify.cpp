#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <optional>

#include "minhyp/verify/catalog.hpp"
#include "minhyp/verify/runner.hpp"

using namespace minhyp;
using namespace minhyp::verify;
using algebra::make_scalar;

namespace {

struct Loaded {
  const SymbolContext& ctx = symbols();
  DerivationSystem closed{ctx, VMode::eliminated};
  DerivationSystem open{ctx, VMode::free};
  FixtureBank coefficients =
      FixtureBank::load(MINHYP_FIXTURE_DIR, ctx.registry(), ctx.macros(), coefficient_spot_checks());
  FixtureBank goldens = FixtureBank::load(MINHYP_GOLDEN_DIR, ctx.registry(), ctx.macros());
  Inputs in{ctx, closed, open, coefficients, goldens};
};

const Loaded& loaded() {
  static const Loaded l;
  return l;
}

Claim build(std::string_view name) {
  for (const auto& spec : certificate_catalog())
    if (spec.name == name) return spec.build(loaded().in);
  FAIL("no certificate " << name);
  return {};
}

// v1 v2 v3 V1 V2 V3 a1 a2 a3 c ct
std::vector<ExactScalar> point(ExactScalar v1, ExactScalar v2, ExactScalar v3) {
  return {v1,
          v2,
          v3,
          make_scalar(1, 3),
          make_scalar(2, 5),
          make_scalar(3, 7),
          make_scalar(2, 3),
          make_scalar(5, 7),
          make_scalar(3, 11),
          make_scalar(2),
          make_scalar(1, 5)};
}

ExactScalar residual(const Claim& c, const std::vector<ExactScalar>& pt) {
  return c.lhs.evaluate(pt) - c.rhs.evaluate(pt);
}

Claim make_claim(ClaimKind kind, RationalExpr lhs, RationalExpr rhs) {
  Claim c;
  c.kind = kind;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

std::optional<Status> status_of(const VerificationReport& r, std::string_view name) {
  for (const auto& res : r.results)
    if (res.name == name) return res.status;
  return std::nullopt;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("symbol context values") {
    const auto& ctx = symbols();
    std::vector<ExactScalar> pt(ctx.registry().size(), make_scalar(0));
    pt[ctx.v(0).index] = 2;
    pt[ctx.v(1).index] = 1;
    pt[ctx.v(2).index] = 1;
    pt[ctx.V(0).index] = 1;
    CHECK(ctx.V_cap(1).evaluate(pt) == make_scalar(3, 4));
    CHECK(ctx.V_cap(0).evaluate(pt) == make_scalar(1));

    std::vector<ExactScalar> t(ctx.registry().size(), make_scalar(0));
    t[ctx.v(0).index] = 1;
    CHECK(ctx.theta().evaluate(t) == 0);
    t[ctx.v(0).index] = 0;
    t[ctx.v(1).index] = 1;
    CHECK(ctx.theta().evaluate(t) == 2);

    std::vector<ExactScalar> q(ctx.registry().size(), make_scalar(0));
    q[ctx.v(0).index] = 2;
    q[ctx.v(1).index] = make_scalar(7, 4);
    q[ctx.v(2).index] = make_scalar(1, 4);
    CHECK(ctx.unit_relation().evaluate(q) == 0);
    CHECK(ctx.reduce_unit(ctx.unit_relation()).is_zero());
  }

  TEST_CASE("phi values at an integer point") {
    const auto& ctx = symbols();
    auto pt = point(2, 3, 5);
    CHECK(ctx.phi(0).evaluate(pt) == 33);
    CHECK(ctx.phi(1).evaluate(pt) == 280);
    CHECK(ctx.phi(2).evaluate(pt) == 1776);
  }

  TEST_CASE("linear system determinant at (2,3,5)") {
    Claim c = build("linear_system.det");
    auto pt = point(2, 3, 5);
    ExactScalar expect = ExactScalar(-60) * 33 * 280 * 1776;
    CHECK(c.lhs.evaluate(pt) == expect);
    CHECK(c.rhs.evaluate(pt) == expect);
  }

  TEST_CASE("compatibility residuals vanish on the quadric only") {
    auto on = point(2, make_scalar(7, 4), make_scalar(1, 4));
    auto off = point(2, 3, 5);
    for (const char* name : {"compat.F1", "compat.F2", "compat.F3"}) {
      CAPTURE(name);
      Claim c = build(name);
      CHECK(c.reduction == Reduction::unit);
      CHECK(residual(c, on) == 0);
    }
    CHECK(residual(build("compat.F1"), off) != 0);
  }

  TEST_CASE("coefficient fixtures load healthy") {
    const auto& bank = loaded().coefficients;
    for (int k = 1; k <= 3; ++k)
      for (int j = 1; j <= 5; ++j) {
        std::string n = "F" + std::to_string(k) + std::to_string(j);
        CAPTURE(n);
        REQUIRE(bank.healthy(n));
        CHECK_FALSE(bank.get(n).is_zero());
      }
    for (const auto& [n, rec] : bank.records()) {
      CAPTURE(n);
      CHECK(rec.state == FixtureState::ok);
    }
  }

  TEST_CASE("certify distinguishes true and false claims") {
    const auto& ctx = symbols();
    RationalExpr x = ctx.var(ctx.v(0));
    Claim wrong = make_claim(ClaimKind::equal, x, x + RationalExpr(1));
    CHECK(certify("wrong", wrong).status == Status::counterexample);

    RationalExpr q = x * x - ctx.var(ctx.v(1)).pow(2) + ctx.var(ctx.v(2)).pow(2);
    Claim unit = make_claim(ClaimKind::equal, q, RationalExpr(1));
    CHECK(certify("unreduced", unit).status == Status::counterexample);
    unit.reduction = Reduction::unit;
    auto r = certify("reduced", unit);
    CHECK(r.status == Status::proved);
    CHECK(r.eval_points == EvalOptions{}.points);

    Claim zero = make_claim(ClaimKind::nonzero, x - x, {});
    CHECK_FALSE(certify("zero", zero).passed());
    Claim nz = make_claim(ClaimKind::nonzero, x, {});
    nz.witness = {make_scalar(1)};
    CHECK(certify("nonzero", nz).status == Status::proved);
  }

  TEST_CASE("sampled points lie on the unit quadric") {
    PointSampler s(99);
    const auto& ctx = symbols();
    for (int i = 0; i < 50; ++i) {
      auto p = s.next(true);
      CHECK(ctx.unit_relation().evaluate(p) == 0);
    }
  }

  TEST_CASE("filter selects a single certificate") {
    RunOptions o;
    o.filter = "case_d";
    auto r = run_all(o);
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].name == "case_d");
    CHECK(r.results[0].status == Status::proved);
  }

  TEST_CASE("empty selection warns and passes") {
    RunOptions o;
    o.filter = "no_such_certificate*";
    auto r = run_all(o);
    CHECK(r.results.empty());
    CHECK(r.all_passed());
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("selects no certificate") != std::string::npos);
  }

  TEST_CASE("reports are reproducible across thread counts") {
    RunOptions a;
    a.filter = "closure.*";
    a.threads = 1;
    RunOptions b = a;
    b.threads = 3;
    auto ra = run_all(a);
    auto rb = run_all(b);
    CHECK(ra.all_passed());
    CHECK(ra.results.size() == 6);
    CHECK(ra.to_json() == rb.to_json());
  }

  TEST_CASE("curvature eliminations prove") {
    RunOptions o;
    o.filter = "curvature.*";
    auto r = run_all(o);
    CHECK(r.results.size() == 10);
    for (const auto& res : r.results) {
      CAPTURE(res.name);
      CHECK(res.status == Status::proved);
    }
  }

  TEST_CASE("a corrupted fixture fails alone and skips its dependents") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "minhyp_corrupt_fixture";
    fs::remove_all(tmp);
    fs::copy(MINHYP_FIXTURE_DIR, tmp);
    {
      std::ofstream f(tmp / "F12.expr", std::ios::app);
      f << " + v1\n";
    }
    RunOptions o;
    o.fixture_dir = tmp;
    o.filter = "fixture.*";
    auto r = run_all(o);
    std::size_t failed = 0;
    for (const auto& res : r.results)
      if (!res.passed()) {
        ++failed;
        CHECK(res.name == "fixture.F12");
      }
    CHECK(failed == 1);
    CHECK(r.results.size() == loaded().coefficients.records().size());

    o.filter = "compat.F1";
    auto d = run_all(o);
    CHECK(status_of(d, "compat.F1") == Status::skipped);
    CHECK_FALSE(d.all_passed());
    fs::remove_all(tmp);
  }

  TEST_CASE("certificate catalog names are unique and sorted") {
    auto names = certificate_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    CHECK(names.size() == 118);
  }
}
