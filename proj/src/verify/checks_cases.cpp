#include <string>

#include "minhyp/algebra/matrix.hpp"
#include "minhyp/verify/catalog.hpp"

namespace minhyp::verify {

namespace {

using algebra::Matrix2;
using algebra::Matrix3;
using algebra::MultiPoly;

struct Sym {
  const SymbolContext& ctx;
  RationalExpr v(int i) const { return ctx.var(ctx.v(i)); }
  RationalExpr sq(int i) const { return v(i) * v(i); }
  RationalExpr a(int i) const { return ctx.var(ctx.alpha(i)); }
  RationalExpr V(int i) const { return ctx.var(ctx.V(i)); }
  RationalExpr phi(int i) const { return ctx.phi(i); }
  RationalExpr c() const { return ctx.var(ctx.c()); }
  RationalExpr ct() const { return ctx.var(ctx.ctilde()); }
  RationalExpr theta() const { return ctx.theta(); }
  RationalExpr poly(std::string_view text) const { return algebra::parse_poly(text, ctx.registry(), ctx.macros()); }
};

Claim equal(RationalExpr lhs, RationalExpr rhs, Reduction red, std::string note = {}) {
  Claim c;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.reduction = red;
  c.note = std::move(note);
  return c;
}

RationalExpr zero_alphas(const SymbolContext& ctx, const RationalExpr& e, std::initializer_list<int> which) {
  std::vector<std::pair<VarId, RationalExpr>> b;
  for (int i : which) b.push_back({ctx.alpha(i), RationalExpr(0)});
  return substitute(e, b);
}

// Left minus right side of equation i of the all-alpha-zero system, over free V.
RationalExpr case_a_equation(const SymbolContext& ctx, int i) {
  Sym s{ctx};
  static constexpr int sign[3][3] = {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  RationalExpr c_side = s.c() * s.v(0) * s.v(1) * s.v(2) *
                        (RationalExpr(long(sign[i][0])) * s.phi(0) + RationalExpr(long(sign[i][1])) * s.phi(1) +
                         RationalExpr(long(sign[i][2])) * s.phi(2));
  // Term n carries v_n phi_n and the other two V's; its sign is -sign[i][n].
  RationalExpr v_side;
  for (int n = 0; n < 3; ++n) {
    int p = (n + 1) % 3, q = (n + 2) % 3;
    v_side += RationalExpr(long(-sign[i][n])) * s.v(n) * s.phi(n) * s.V(p) * s.V(q);
  }
  return c_side - v_side;
}

RationalExpr case_c_constant(const SymbolContext& ctx) {
  Sym s{ctx};
  return s.c() * s.v(0) * (s.phi(0) - s.phi(1) - s.phi(2)) / (RationalExpr(2) * s.phi(1) * s.phi(2));
}

struct CaseC {
  RationalExpr A, B, C, At, Bt, Ct, F33, F34, F35;
};

CaseC case_c_rows(const Inputs& in) {
  return {in.fx("casec_A"), in.fx("casec_B"), in.fx("casec_C"), in.fx("casec_At"), in.fx("casec_Bt"),
          in.fx("casec_Ct"), in.fx("F33"), in.fx("F34"), in.fx("F35")};
}

const std::vector<std::string> kCaseC{"casec_A", "casec_B", "casec_C", "casec_At", "casec_Bt", "casec_Ct",
                                      "F33",     "F34",     "F35"};

std::vector<ExactScalar> witness_v2(long value) {
  std::vector<ExactScalar> p(algebra::kMaxVars);
  p[1] = value;
  return p;
}

}  // namespace

MultiPoly coefficient_resultant(const Inputs& in, std::string_view p, std::string_view q) {
  const auto& a = in.raw(p);
  const auto& b = in.raw(q);
  if (!a.is_polynomial() || !b.is_polynomial()) throw std::invalid_argument("resultant inputs must be polynomials");
  return algebra::resultant(a.numerator(), b.numerator(), in.ctx.v(2));
}

void add_case_checks(std::vector<CertificateSpec>& out) {
  // (a) all alphas vanish.
  for (int i = 0; i < 3; ++i) {
    out.push_back({"case_a.system." + std::to_string(i + 1), {}, {}, [i](const Inputs& in) {
                     Sym s{in.ctx};
                     int j = (i + 1) % 3, k = (i + 2) % 3;
                     RationalExpr rule = zero_alphas(in.ctx, in.open.alpha_diag(i), {0, 1, 2});
                     RationalExpr lhs = RationalExpr(2) * s.v(j) * s.v(k) * s.phi(j) * s.phi(k) * rule;
                     return equal(lhs, case_a_equation(in.ctx, i), Reduction::none);
                   }});
  }
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    std::string name = "case_a.sum" + std::to_string(i + 1) + std::to_string(j + 1);
    out.push_back({name, {}, {}, [i, j](const Inputs& in) {
                     Sym s{in.ctx};
                     int k = 3 - i - j;
                     RationalExpr lhs = case_a_equation(in.ctx, i) + case_a_equation(in.ctx, j);
                     RationalExpr rhs =
                         RationalExpr(-2) * s.phi(k) * s.v(k) * (s.V(i) * s.V(j) + s.c() * s.v(i) * s.v(j));
                     return equal(lhs, rhs, Reduction::none);
                   }});
  }

  // (b) all alphas nonzero.
  std::vector<std::string> all_F;
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 5; ++j) all_F.push_back("F" + std::to_string(k) + std::to_string(j));
  out.push_back({"case_b.det_F", all_F, {}, [](const Inputs& in) {
                   Matrix3<RationalExpr> m;
                   for (int r = 0; r < 3; ++r)
                     for (int col = 0; col < 3; ++col)
                       m[r][col] = in.fx("F" + std::to_string(r + 1) + std::to_string(col + 1));
                   return equal(algebra::det3(m), RationalExpr(0), Reduction::unit);
                 }});
  auto det_a = [](const Inputs& in) {
    Matrix3<RationalExpr> m;
    for (int r = 0; r < 3; ++r) {
      std::string p = "F" + std::to_string(r + 1);
      m[r] = {in.fx(p + "4") + in.fx(p + "5"), in.fx(p + "2"), in.fx(p + "3")};
    }
    return algebra::det3(m);
  };
  {
    auto deps = all_F;
    deps.push_back("a");
    out.push_back({"case_b.det_a", deps, {}, [det_a](const Inputs& in) {
                     return equal(det_a(in), in.fx("a"), Reduction::unit);
                   }});
    deps.back() = "P";
    out.push_back({"case_b.quotient", deps, {}, [det_a](const Inputs& in) {
                     Sym s{in.ctx};
                     RationalExpr pre = RationalExpr(36) * s.phi(0).pow(3) * s.phi(1) * s.phi(2) * s.v(0).pow(6) *
                                        s.V(0).pow(2) * s.theta().pow(2);
                     RationalExpr rest = s.poly("(-1 + 3*v1^2)*(1 + 3*v2^2)*(-1 + 3*v3^2)*(v1^2 + v2^2)*"
                                                "(v1^2 - v3^2)*(v2^2 + v3^2)^4") *
                                         in.fx("P");
                     return equal(det_a(in) / pre, rest, Reduction::unit);
                   }});
  }
  out.push_back({"case_b.minor", {}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   auto dv = [&](int i, int j) { return *in.closed.rule(in.ctx.v(i), j); };
                   RationalExpr minor = dv(0, 0) * dv(1, 1) - dv(0, 1) * dv(1, 0);
                   RationalExpr rhs = -s.a(0) * s.a(1) * s.sq(2) * s.phi(2) *
                                      (s.sq(0) * s.phi(0) - s.sq(1) * s.phi(1) + s.sq(2) * s.phi(2));
                   return equal(minor, rhs, Reduction::none);
                 }});
  out.push_back({"case_b.minor_theta", {}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr lhs = s.sq(0) * s.phi(0) - s.sq(1) * s.phi(1) + s.sq(2) * s.phi(2);
                   return equal(lhs, s.theta(), Reduction::unit);
                 }});

  // (c) alpha_1 = alpha_2 = 0.
  out.push_back({"case_c.restrict_1", {"casec_A", "casec_B", "casec_C"}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr rule = zero_alphas(in.ctx, in.closed.alpha_diag(0), {0, 1});
                   return equal(rule, in.fx("casec_A") * s.a(2) * s.a(2) + in.fx("casec_B") + in.fx("casec_C"),
                                Reduction::none);
                 }});
  out.push_back({"case_c.restrict_2", {"casec_At", "casec_Bt", "casec_Ct"}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr rule = zero_alphas(in.ctx, in.closed.alpha_diag(1), {0, 1});
                   return equal(rule, in.fx("casec_At") * s.a(2) * s.a(2) + in.fx("casec_Bt") + in.fx("casec_Ct"),
                                Reduction::none);
                 }});
  {
    auto deps = kCaseC;
    deps.push_back("P1");
    out.push_back({"case_c.det3", deps, {}, [](const Inputs& in) {
                     Sym s{in.ctx};
                     CaseC k = case_c_rows(in);
                     RationalExpr det = algebra::det3(Matrix3<RationalExpr>{{{k.A, k.B, k.C},
                                                                            {k.At, k.Bt, k.Ct},
                                                                            {k.F33, k.F34, k.F35}}});
                     RationalExpr rhs = RationalExpr(2) * s.c() * s.v(0) * s.v(1) *
                                        s.poly("(1 + 3*v2^2)*(1 - 3*v1^2)*(v1^2 + v2^2)^2") * s.V(0).pow(2) *
                                        in.fx("P1");
                     return equal(det, rhs, Reduction::unit,
                                  "factor is (1 - 3 v1^2) where (1 - v1^2) is printed");
                   }});
    deps.back() = "P2";
    out.push_back({"case_c.det2a", deps, {}, [](const Inputs& in) {
                     Sym s{in.ctx};
                     CaseC k = case_c_rows(in);
                     RationalExpr det = algebra::det2(Matrix2<RationalExpr>{{{k.A, k.B + k.C}, {k.At, k.Bt + k.Ct}}});
                     RationalExpr w = (s.sq(1) + s.sq(2)).pow(2);
                     RationalExpr rhs = s.v(1) * (s.sq(0) + s.sq(1)) / (s.v(0) * w * s.phi(2)) *
                                        (s.V(0).pow(2) * in.fx("P2") -
                                         s.c() * s.sq(0) * s.poly("-1 + 9*v3^2") * w);
                     return equal(det, rhs, Reduction::unit);
                   }});
    deps.back() = "P3";
    deps.push_back("P4");
    out.push_back({"case_c.det2b", deps, {}, [](const Inputs& in) {
                     Sym s{in.ctx};
                     CaseC k = case_c_rows(in);
                     RationalExpr det =
                         algebra::det2(Matrix2<RationalExpr>{{{k.A, k.B + k.C}, {k.F33, k.F34 + k.F35}}});
                     RationalExpr w = (s.sq(1) + s.sq(2)).pow(2);
                     RationalExpr rhs = -s.v(0) * (s.sq(0) + s.sq(1)) * s.phi(0) *
                                        (s.V(0).pow(2) * in.fx("P3") + s.c() * s.sq(0) * w * in.fx("P4"));
                     return equal(det, rhs, Reduction::unit, "overall sign is opposite to the printed one");
                   }});
  }
  out.push_back({"case_c.dP1_du3", {"P1", "Q"}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr d = zero_alphas(in.ctx, in.closed.apply(in.fx("P1"), 2, false), {0, 1});
                   return equal(d, RationalExpr(2) * s.v(2) * s.a(2) * in.fx("Q"), Reduction::unit,
                                "prefactor 2 v3 alpha3");
                 }});
  for (auto [p, q] : {std::pair{"P2", "P3"}, std::pair{"P1", "Q"}}) {
    std::string tag = std::string(p) + "_" + q;
    std::string golden = "resultant_" + tag;
    out.push_back({"resultant." + tag + ".golden", {p, q}, {golden}, [p, q, golden](const Inputs& in) {
                     return equal(coefficient_resultant(in, p, q), in.goldens.get(golden), Reduction::none,
                                  "resultant in v3, compared with the stored golden");
                   }});
    out.push_back({"resultant." + tag + ".nonzero", {p, q}, {}, [p, q](const Inputs& in) {
                     Claim c;
                     c.kind = ClaimKind::nonzero;
                     c.lhs = coefficient_resultant(in, p, q);
                     c.witness = witness_v2(2);
                     c.note = "witness v2 = 2";
                     return c;
                   }});
  }

  // (d) alpha_1 = 0, alpha_2 alpha_3 != 0.
  out.push_back({"case_d.restrict", {"cased_A", "cased_B", "cased_C"}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr rule = zero_alphas(in.ctx, in.closed.alpha_diag(0), {0});
                   RationalExpr rhs = in.fx("cased_A") * s.a(1) * s.a(1) + in.fx("cased_B") * s.a(2) * s.a(2) +
                                      in.fx("cased_C") + case_c_constant(in.ctx);
                   return equal(rule, rhs, Reduction::none, "C needs the term c v1 (phi1 - phi2 - phi3) / (2 phi2 phi3)");
                 }});
  out.push_back({"case_d",
                 {"cased_A", "cased_B", "cased_C", "F22", "F23", "F24", "F25", "F32", "F33", "F34", "F35", "R1", "R2"},
                 {},
                 [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr C = in.fx("cased_C") + case_c_constant(in.ctx);
                   Matrix3<RationalExpr> m{{{in.fx("cased_A"), in.fx("cased_B"), C},
                                            {in.fx("F22"), in.fx("F23"), in.fx("F24") + in.fx("F25")},
                                            {in.fx("F32"), in.fx("F33"), in.fx("F34") + in.fx("F35")}}};
                   RationalExpr det = in.ctx.eliminate_V1_squared(algebra::det3(m));
                   RationalExpr pre = RationalExpr(6) * s.v(0).pow(5) * s.phi(0).pow(2) *
                                      (s.sq(1) + s.sq(2)).pow(4) / s.theta();
                   RationalExpr rhs = pre * (s.c() * in.fx("R1") - s.ct() * in.fx("R2"));
                   return equal(det, rhs, Reduction::unit,
                                "det = 6 v1^5 phi1^2 (v2^2 + v3^2)^4 (c R1 - ct R2) / Theta, with the c-term "
                                "restored in C");
                 }});
}

}  // namespace minhyp::verify
