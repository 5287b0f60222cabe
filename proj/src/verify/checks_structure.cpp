#include <array>
#include <string>
#include <tuple>

#include "minhyp/algebra/matrix.hpp"
#include "minhyp/verify/catalog.hpp"

namespace minhyp::verify {

namespace {

struct Sym {
  const SymbolContext& ctx;
  RationalExpr v(int i) const { return ctx.var(ctx.v(i)); }
  RationalExpr sq(int i) const { return v(i) * v(i); }
  RationalExpr a(int i) const { return ctx.var(ctx.alpha(i)); }
  RationalExpr Vfree(int i) const { return ctx.var(ctx.V(i)); }
  RationalExpr V(int i) const { return ctx.V_cap(i); }
  RationalExpr phi(int i) const { return ctx.phi(i); }
  RationalExpr d(int i) const { return long(SymbolContext::delta[i]); }
  RationalExpr c() const { return ctx.var(ctx.c()); }
  RationalExpr ct() const { return ctx.var(ctx.ctilde()); }
};

std::string idx(int i) { return std::to_string(i + 1); }
std::string idx(int i, int j) { return idx(i) + idx(j); }

Claim equal(RationalExpr lhs, RationalExpr rhs, Reduction red, std::string note = {}) {
  Claim c;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.reduction = red;
  c.note = std::move(note);
  return c;
}

// F_k assembled from its transcribed pieces, V eliminated.
RationalExpr assemble_F(const Inputs& in, int k) {
  Sym s{in.ctx};
  std::string p = "F" + idx(k);
  return in.fx(p + "1") * s.a(0) * s.a(0) + in.fx(p + "2") * s.a(1) * s.a(1) + in.fx(p + "3") * s.a(2) * s.a(2) +
         in.fx(p + "4") + in.fx(p + "5");
}

std::vector<std::string> F_row(int k) {
  std::vector<std::string> out;
  for (int j = 1; j <= 5; ++j) out.push_back("F" + idx(k) + std::to_string(j));
  return out;
}

}  // namespace

RationalExpr h_from_alpha(const SymbolContext& ctx, int i, int j) {
  Sym s{ctx};
  return s.v(j) * s.phi(j) * s.a(i);
}

RationalExpr vivj_relation(const SymbolContext& ctx, int i, int j) {
  Sym s{ctx};
  int k = 3 - i - j;
  return s.v(i) * (s.d(j) * s.sq(j) - s.d(k) * s.sq(k)) * s.Vfree(j) +
         s.v(j) * (s.d(i) * s.sq(i) - s.d(k) * s.sq(k)) * s.Vfree(i);
}

std::pair<RationalExpr, RationalExpr> derive_V2_V3(const SymbolContext& ctx) {
  // Each relation is linear in (V1, V2, V3); split off the V1 part.
  auto row = [&](int i, int j) {
    RationalExpr rel = vivj_relation(ctx, i, j);
    auto coef = [&](int n) {
      std::vector<std::pair<VarId, RationalExpr>> b;
      for (int m = 0; m < 3; ++m) b.push_back({ctx.V(m), RationalExpr(m == n ? 1 : 0)});
      return substitute(rel, b);
    };
    return std::array<RationalExpr, 3>{coef(0), coef(1), coef(2)};
  };
  auto r12 = row(0, 1), r13 = row(0, 2);
  RationalExpr V1 = ctx.var(ctx.V(0));
  algebra::Matrix2<RationalExpr> m{{{r12[1], r12[2]}, {r13[1], r13[2]}}};
  RationalExpr det = algebra::det2(m);
  RationalExpr rhs1 = -r12[0] * V1, rhs2 = -r13[0] * V1;
  RationalExpr V2 = algebra::det2({{{rhs1, r12[2]}, {rhs2, r13[2]}}}) / det;
  RationalExpr V3 = algebra::det2({{{r12[1], rhs1}, {r13[1], rhs2}}}) / det;
  return {V2, V3};
}

RationalExpr Inputs::fx(std::string_view name) const {
  auto b = ctx.V_elimination();
  return substitute(coefficients.get(name), b);
}

void add_structure_checks(std::vector<CertificateSpec>& out) {
  // Elimination of V2, V3 and the Theta relation.
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    out.push_back({"closure.ViVj." + idx(i, j), {}, {}, [i, j](const Inputs& in) {
                     Sym s{in.ctx};
                     int k = 3 - i - j;
                     RationalExpr second, fourth;
                     for (int n = 0; n < 3; ++n) {
                       second += s.d(n) * s.v(n) * s.Vfree(n);
                       fourth += s.Vfree(n) / s.v(n);
                     }
                     RationalExpr combo = s.v(i) * s.v(j) * (second - s.d(k) * s.sq(k) * fourth);
                     return equal(combo, vivj_relation(in.ctx, i, j), Reduction::none);
                   }});
  }
  out.push_back({"closure.V2", {}, {}, [](const Inputs& in) {
                   return equal(derive_V2_V3(in.ctx).first, in.ctx.V_cap(1), Reduction::none);
                 }});
  out.push_back({"closure.V3", {}, {}, [](const Inputs& in) {
                   return equal(derive_V2_V3(in.ctx).second, in.ctx.V_cap(2), Reduction::none);
                 }});
  out.push_back({"closure.remaining_relation", {}, {}, [](const Inputs& in) {
                   auto b = in.ctx.V_elimination();
                   return equal(substitute(vivj_relation(in.ctx, 1, 2), b), RationalExpr(0), Reduction::unit);
                 }});
  out.push_back({"theta_relation", {}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr sum;
                   for (int n = 0; n < 3; ++n) sum += s.d(n) * s.V(n) * s.V(n);
                   RationalExpr W = s.sq(0) * (s.sq(1) + s.sq(2)).pow(2);
                   RationalExpr V1 = s.Vfree(0);
                   return equal(sum, -V1 * V1 * RationalExpr(in.ctx.theta()) / W, Reduction::unit,
                                "sum d_i V_i^2 = -V1^2 Theta / (v1^2 (v2^2 + v3^2)^2), hence "
                                "V1^2 = (ct - c) v1^2 (v2^2 + v3^2)^2 / Theta");
                 }});

  // The closed system preserves the constraints.
  for (int j = 0; j < 3; ++j) {
    out.push_back({"derivation.unit_invariance.u" + idx(j), {}, {}, [j](const Inputs& in) {
                     RationalExpr d = in.closed.apply(RationalExpr(in.ctx.unit_relation()), j, false);
                     return equal(d, RationalExpr(0), Reduction::none);
                   }});
    out.push_back({"derivation.theta_invariance.u" + idx(j), {}, {}, [j](const Inputs& in) {
                     Sym s{in.ctx};
                     RationalExpr V1 = s.Vfree(0);
                     RationalExpr W = s.sq(0) * (s.sq(1) + s.sq(2)).pow(2);
                     RationalExpr R = V1 * V1 * RationalExpr(in.ctx.theta()) + (s.c() - s.ct()) * W;
                     RationalExpr lhs = W * in.closed.apply(R, j, false) - in.closed.apply(W, j, false) * R;
                     return equal(lhs, RationalExpr(0), Reduction::unit,
                                  "W d(R) - d(W) R with R = V1^2 Theta + (c - ct) W, W = v1^2 (v2^2 + v3^2)^2");
                   }});
  }

  // The holonomic system for (v, h, V) with h_ij = v_j phi_j alpha_i.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      out.push_back({"consistency.i." + idx(i, j), {}, {}, [i, j](const Inputs& in) {
                       Sym s{in.ctx};
                       return equal(in.closed.apply(s.v(i), j, false), h_from_alpha(in.ctx, j, i) * s.v(j),
                                    Reduction::unit);
                     }});
      out.push_back({"consistency.iii." + idx(i, j), {}, {}, [i, j, k](const Inputs& in) {
                       auto h = [&](int a, int b) { return h_from_alpha(in.ctx, a, b); };
                       return equal(in.closed.apply(h(i, k), j, false), h(i, j) * h(j, k), Reduction::unit);
                     }});
      out.push_back({"consistency.iv." + idx(i, j), {}, {}, [i, j](const Inputs& in) {
                       Sym s{in.ctx};
                       return equal(in.closed.apply(s.V(i), j, false), h_from_alpha(in.ctx, j, i) * s.V(j),
                                    Reduction::unit);
                     }});
      if (i < j)
        out.push_back({"consistency.ii." + idx(i, j), {}, {}, [i, j, k](const Inputs& in) {
                         Sym s{in.ctx};
                         auto h = [&](int a, int b) { return h_from_alpha(in.ctx, a, b); };
                         RationalExpr lhs = in.closed.apply(h(i, j), i, false) + in.closed.apply(h(j, i), j, false) +
                                            h(k, i) * h(k, j) + s.V(i) * s.V(j) + s.c() * s.v(i) * s.v(j);
                         return equal(lhs, RationalExpr(0), Reduction::unit);
                       }});
    }
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    out.push_back({"consistency.v." + idx(i), {}, {}, [i, j, k](const Inputs& in) {
                     Sym s{in.ctx};
                     auto h = [&](int a, int b) { return h_from_alpha(in.ctx, a, b); };
                     RationalExpr lhs = s.d(i) * in.closed.apply(s.v(i), i, false) + s.d(j) * h(i, j) * s.v(j) +
                                        s.d(k) * h(i, k) * s.v(k);
                     return equal(lhs, RationalExpr(0), Reduction::unit);
                   }});
    out.push_back({"consistency.vi." + idx(i), {}, {}, [i, j, k](const Inputs& in) {
                     Sym s{in.ctx};
                     auto h = [&](int a, int b) { return h_from_alpha(in.ctx, a, b); };
                     RationalExpr lhs = s.d(i) * in.closed.apply(s.V(i), i, false) + s.d(j) * h(i, j) * s.V(j) +
                                        s.d(k) * h(i, k) * s.V(k);
                     return equal(lhs, RationalExpr(0), Reduction::unit);
                   }});
  }

  // Linear system for the diagonal derivatives of alpha.
  out.push_back({"linear_system.det", {}, {}, [](const Inputs& in) {
                   Sym s{in.ctx};
                   auto vp = [&](int n) { return s.v(n) * s.phi(n); };
                   algebra::Matrix3<RationalExpr> m{{{vp(1), vp(0), 0}, {vp(2), 0, vp(0)}, {0, vp(2), vp(1)}}};
                   return equal(algebra::det3(m), RationalExpr(-2) * vp(0) * vp(1) * vp(2), Reduction::none);
                 }});
  for (auto [e, i, j] : {std::tuple{1, 0, 1}, std::tuple{2, 0, 2}, std::tuple{3, 1, 2}}) {
    std::string b = "b" + std::to_string(e);
    out.push_back({"linear_system.eq" + std::to_string(e), {b}, {}, [i, j, b](const Inputs& in) {
                     Sym s{in.ctx};
                     RationalExpr lhs = s.v(j) * s.phi(j) * in.closed.alpha_diag(i) +
                                        s.v(i) * s.phi(i) * in.closed.alpha_diag(j);
                     RationalExpr rhs = -(in.fx(b) + s.c() * s.v(i) * s.v(j));
                     return equal(lhs, rhs, Reduction::unit,
                                  "right-hand side is -(" + b + " + c v_i v_j), not " + b + " as printed");
                   }});
  }

  // Compatibility conditions: mixed partials of alpha.
  auto mixed = [](const Inputs& in, int gen, int first, int second) {
    // d/du_second (d alpha_gen / du_first)
    const auto& r = *in.closed.rule(in.ctx.alpha(gen), first);
    return in.closed.apply(r, second, false);
  };
  out.push_back({"compat.F2", F_row(1), {}, [mixed](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr lhs = mixed(in, 0, 0, 1) - mixed(in, 0, 1, 0);
                   RationalExpr pre = RationalExpr(2) * s.v(1) /
                                      (s.v(0) * (s.sq(1) + s.sq(2)).pow(2) * s.phi(1).pow(2) * s.phi(2));
                   return equal(lhs, pre * s.a(1) * assemble_F(in, 1), Reduction::unit);
                 }});
  out.push_back({"compat.F3", F_row(2), {}, [mixed](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr lhs = mixed(in, 0, 0, 2) - mixed(in, 0, 2, 0);
                   RationalExpr pre = RationalExpr(2) * s.v(2) /
                                      (s.v(0) * (s.sq(1) + s.sq(2)).pow(2) * s.phi(1) * s.phi(2).pow(2));
                   return equal(lhs, pre * s.a(2) * assemble_F(in, 2), Reduction::unit);
                 }});
  out.push_back({"compat.F1", F_row(0), {}, [mixed](const Inputs& in) {
                   Sym s{in.ctx};
                   RationalExpr lhs = mixed(in, 1, 0, 1) - mixed(in, 1, 1, 0);
                   RationalExpr pre = RationalExpr(-2) * s.v(1) /
                                      (s.v(0) * (s.sq(1) + s.sq(2)) * s.phi(0).pow(2) * s.phi(2));
                   return equal(lhs, pre * s.a(0) * assemble_F(in, 0), Reduction::unit);
                 }});
}

}  // namespace minhyp::verify
