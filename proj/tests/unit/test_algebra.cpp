#include <doctest.h>

#include <random>

#include "minhyp/algebra/matrix.hpp"
#include "minhyp/algebra/text.hpp"

using namespace minhyp::algebra;

namespace {

const VarRegistry& xyz() {
  static const VarRegistry reg{"x", "y", "z"};
  return reg;
}

MultiPoly random_poly(std::mt19937_64& rng, int terms = 5, unsigned max_exp = 3) {
  std::vector<MultiPoly::Term> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::uint8_t v = 0; v < 3; ++v) m = m * Monomial::of(VarId{v}, unsigned(rng() % (max_exp + 1)));
    long num = long(rng() % 19) - 9;
    long den = long(rng() % 5) + 1;
    t.push_back({m, make_scalar(num, den)});
  }
  return MultiPoly::from_terms(std::move(t));
}

MultiPoly var(std::string_view n) { return MultiPoly::variable(xyz().at(n)); }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a * MultiPoly(1) == a);
      CHECK((a * MultiPoly(0)).is_zero());
    }
  }

  TEST_CASE("derivative obeys the product rule") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      MultiPoly a = random_poly(rng), b = random_poly(rng);
      for (std::uint8_t v = 0; v < 3; ++v) {
        VarId x{v};
        CHECK((a * b).derivative(x) == a.derivative(x) * b + a * b.derivative(x));
      }
    }
  }

  TEST_CASE("quotient rule on rational expressions") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      MultiPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
      if (b.is_zero()) continue;
      RationalExpr q = RationalExpr::quotient(a, b);
      VarId x{0};
      RationalExpr expect = (RationalExpr(a.derivative(x)) * b - RationalExpr(a) * b.derivative(x)) /
                            (RationalExpr(b) * RationalExpr(b));
      CHECK(q.derivative(x) == expect);
    }
  }

  TEST_CASE("canonical text round-trips through the parser") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      MultiPoly a = random_poly(rng);
      std::string s = to_string(a, xyz());
      CHECK(parse_poly(s, xyz()) == a);
      CHECK(to_string(parse_poly(s, xyz()), xyz()) == s);
    }
    CHECK(to_string(MultiPoly(), xyz()) == "0");
    CHECK(to_string(parse_poly("x^2 - 3/4*x*y + 1", xyz()), xyz()) == "x^2 - 3/4*x*y + 1");
  }

  TEST_CASE("rational expressions print and parse") {
    RationalExpr e = parse_expr("(x + 1)/(y^2*(x - z))", xyz());
    RationalExpr back = parse_expr(to_string(e, xyz()), xyz());
    CHECK(back == e);
    CHECK_THROWS_AS(parse_expr("x +", xyz()), ParseError);
    CHECK_THROWS_AS(parse_expr("w", xyz()), ParseError);
    CHECK_THROWS_AS((RationalExpr(var("x")) / RationalExpr(MultiPoly())), DivisionByZeroPolynomial);
  }

  TEST_CASE("determinants of known matrices") {
    Matrix3<RationalExpr> m{{{2, 0, 1}, {1, 3, 2}, {1, 1, 4}}};
    CHECK(det3(m) == RationalExpr(18));
    RationalExpr x = var("x");
    Matrix3<RationalExpr> s{{{x, 1, 0}, {0, x, 1}, {1, 0, x}}};
    CHECK(det3(s) == x * x * x + RationalExpr(1));
    PolyMatrix p{{var("x"), MultiPoly(1), MultiPoly(0)},
                 {MultiPoly(0), var("x"), MultiPoly(1)},
                 {MultiPoly(1), MultiPoly(0), var("x")}};
    CHECK(determinant(p) == var("x").pow(3) + MultiPoly(1));
  }

  TEST_CASE("resultants of known pairs") {
    VarId x = xyz().at("x");
    MultiPoly X = var("x"), Y = var("y");
    CHECK(resultant(X * X - MultiPoly(1), X - MultiPoly(2), x) == MultiPoly(3));
    CHECK(resultant(X * X + Y, X - Y, x) == Y * Y + Y);
    // common root x = 1
    CHECK(resultant(X * X - MultiPoly(1), X - MultiPoly(1), x).is_zero());
    CHECK_THROWS_AS(resultant(Y, X, x), std::invalid_argument);
  }

  TEST_CASE("derivative of the Theta polynomial in v1") {
    VarRegistry reg{"v1", "v2"};
    MultiPoly theta =
        parse_poly("9*v1^4*v2^2 - 9*v1^2*v2^4 + v1^4 - 10*v1^2*v2^2 + v2^4 - v1^2 + v2^2", reg);
    MultiPoly expect = parse_poly("36*v1^3*v2^2 - 18*v1*v2^4 + 4*v1^3 - 20*v1*v2^2 - 2*v1", reg);
    CHECK(theta.derivative(reg.at("v1")) == expect);
  }

  TEST_CASE("division and power elimination") {
    MultiPoly X = var("x"), Y = var("y");
    auto q = exact_quotient(X * X - Y * Y, X - Y);
    REQUIRE(q);
    CHECK(*q == X + Y);
    CHECK_FALSE(exact_quotient(X * X + Y * Y, X - Y));
    // z^2 -> 1 - x^2
    MultiPoly Z = var("z");
    MultiPoly r = eliminate_power(Z.pow(4) + Z, xyz().at("z"), 2, MultiPoly(1) - X * X);
    CHECK(r == (MultiPoly(1) - X * X).pow(2) + Z);
  }

  TEST_CASE("exact evaluation") {
    MultiPoly p = parse_poly("x^2*y - 1/3*z", xyz());
    std::vector<ExactScalar> pt{make_scalar(1, 2), make_scalar(4), make_scalar(3)};
    CHECK(p.evaluate(pt) == make_scalar(0));
    RationalExpr e = parse_expr("x/(y - 4)", xyz());
    CHECK_THROWS_AS(e.evaluate(pt), DivisionByZeroPolynomial);
  }
}
