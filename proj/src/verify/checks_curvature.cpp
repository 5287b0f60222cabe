#include <string>

#include "minhyp/verify/catalog.hpp"

namespace minhyp::verify {

namespace {

// Principal curvatures of f (lam*) and of the second immersion (mu*).
const algebra::VarRegistry& gauss_registry() {
  static const algebra::VarRegistry reg{"lam", "lam1", "lam2", "lam3", "mu", "mu1", "mu2", "mu3", "c", "ct"};
  return reg;
}

RationalExpr g(std::string_view name) { return algebra::MultiPoly::variable(gauss_registry().at(name)); }

// Gauss equation for the pair (i, j), both signs taken as +1:
// c + lam_i lam_j - (ct + mu_i mu_j).
RationalExpr gauss(int i, int j) {
  auto lam = [](int n) { return g("lam" + std::to_string(n)); };
  auto mu = [](int n) { return g("mu" + std::to_string(n)); };
  return g("c") + lam(i) * lam(j) - g("ct") - mu(i) * mu(j);
}

RationalExpr bind(const RationalExpr& e, std::initializer_list<std::pair<std::string_view, RationalExpr>> b) {
  std::vector<std::pair<VarId, RationalExpr>> bindings;
  for (const auto& [name, value] : b) bindings.push_back({gauss_registry().at(name), value});
  return substitute(e, bindings);
}

Claim claim(RationalExpr lhs, RationalExpr rhs, std::string note = {}) {
  Claim c;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.registry = &gauss_registry();
  c.note = std::move(note);
  return c;
}

constexpr const char* kSigns = "Gauss equations taken with both signs +1";

// Multiplicity two: lam1 = lam2 = lam.
RationalExpr case_a(int i, int j) { return bind(gauss(i, j), {{"lam1", g("lam")}, {"lam2", g("lam")}}); }

// A zero principal curvature: lam3 = 0, lam2 = -lam1.
RationalExpr case_b(int i, int j) { return bind(gauss(i, j), {{"lam3", RationalExpr(0)}, {"lam2", -g("lam1")}}); }

}  // namespace

void add_curvature_checks(std::vector<CertificateSpec>& out) {
  auto add = [&](std::string name, std::function<Claim()> f) {
    out.push_back({std::move(name), {}, {}, [f](const Inputs&) { return f(); }});
  };
  RationalExpr dc = g("c") - g("ct");

  add("curvature.a.c4", [] {
    RationalExpr trace = bind(g("lam1") + g("lam2") + g("lam3"), {{"lam1", g("lam")}, {"lam2", g("lam")}});
    return claim(trace, RationalExpr(2) * g("lam") + g("lam3"), kSigns);
  });
  add("curvature.a.mu3_split", [] {
    return claim(case_a(2, 3) - case_a(1, 3), g("mu3") * (g("mu1") - g("mu2")), kSigns);
  });
  add("curvature.a.c1", [dc] {
    RationalExpr e = bind(case_a(1, 2), {{"mu1", g("mu")}, {"mu2", g("mu")}});
    return claim(e, dc + g("lam") * g("lam") - g("mu") * g("mu"), kSigns);
  });
  add("curvature.a.c2", [dc] {
    RationalExpr e = bind(case_a(1, 3), {{"lam3", RationalExpr(-2) * g("lam")}, {"mu1", g("mu")}});
    return claim(e, dc - RationalExpr(2) * g("lam") * g("lam") - g("mu") * g("mu3"), kSigns);
  });
  add("curvature.a.mu3", [dc] {
    RationalExpr e1 = bind(case_a(1, 2), {{"mu1", g("mu")}, {"mu2", g("mu")}});
    RationalExpr e2 = bind(case_a(1, 3), {{"lam3", RationalExpr(-2) * g("lam")}, {"mu1", g("mu")}});
    RationalExpr lhs = g("mu3") - (RationalExpr(3) * dc / g("mu") - RationalExpr(2) * g("mu"));
    return claim(lhs, -(RationalExpr(2) * e1 + e2) / g("mu"),
                 "mu3 - (3(c - ct)/mu - 2 mu) is a combination of the two reduced equations");
  });

  add("curvature.b.d1", [dc] {
    return claim(case_b(1, 2), dc - g("lam1") * g("lam1") - g("mu1") * g("mu2"), kSigns);
  });
  add("curvature.b.mu_equal", [] {
    return claim(case_b(2, 3) - case_b(1, 3), g("mu3") * (g("mu1") - g("mu2")), kSigns);
  });
  add("curvature.b.e1", [dc] {
    RationalExpr e = bind(case_b(1, 2), {{"mu1", g("mu")}, {"mu2", g("mu")}});
    return claim(e, dc - (g("lam1") * g("lam1") + g("mu") * g("mu")), "c - ct = lam1^2 + mu^2, so c > ct");
  });
  add("curvature.b.e2", [dc] {
    RationalExpr e = bind(case_b(1, 3), {{"mu1", g("mu")}});
    return claim(e, dc - g("mu") * g("mu3"), kSigns);
  });
  add("curvature.b.mu3_zero", [dc] {
    RationalExpr e = bind(case_b(1, 3), {{"mu3", RationalExpr(0)}});
    return claim(e, dc, "contradiction: with mu3 = 0 the equation forces c = ct");
  });
}

}  // namespace minhyp::verify
