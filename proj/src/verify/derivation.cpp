#include "minhyp/verify/derivation.hpp"

#include <stdexcept>

namespace minhyp::verify {

DerivationSystem::DerivationSystem(const SymbolContext& ctx, VMode mode) : ctx_(ctx), mode_(mode) {
  auto vx = [&](int i) { return RationalExpr(MultiPoly::variable(ctx.v(i))); };
  auto al = [&](int i) { return RationalExpr(MultiPoly::variable(ctx.alpha(i))); };
  auto ph = [&](int i) { return RationalExpr(ctx.phi(i)); };
  auto dl = [](int i) { return RationalExpr(long(SymbolContext::delta[i])); };
  auto Vs = [&](int i) { return mode == VMode::eliminated ? ctx.V_cap(i) : ctx.var(ctx.V(i)); };
  auto third = [](int i, int j) { return 3 - i - j; };

  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = third(i, j);
      rules_[ctx.v(i).index][j] = vx(j) * vx(i) * ph(i) * al(j);
      rules_[ctx.alpha(i).index][j] =
          vx(j) * (ph(j) - RationalExpr(5) * ph(k) - RationalExpr(8) * dl(k) * vx(k) * vx(k) + RationalExpr(4)) *
          al(i) * al(j);
    }
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (j > k) std::swap(j, k);
    rules_[ctx.v(i).index][i] =
        -dl(i) * (dl(j) * vx(j) * vx(j) * ph(j) + dl(k) * vx(k) * vx(k) * ph(k)) * al(i);

    // d(alpha_i)/du_i; the expression is symmetric under swapping j and k.
    RationalExpr two(2), five(5), eight(8);
    auto sq = [&](int n) { return vx(n) * vx(n); };
    RationalExpr t1 = vx(i) * ph(i) / (two * ph(j)) *
                      (-eight * dl(i) * sq(i) + eight * dl(k) * sq(k) - five * ph(i) - ph(j) + five * ph(k)) *
                      al(j) * al(j);
    RationalExpr t2 = vx(i) * ph(i) / (two * ph(k)) *
                      (-eight * dl(i) * sq(i) + eight * dl(j) * sq(j) - five * ph(i) + five * ph(j) - ph(k)) *
                      al(k) * al(k);
    RationalExpr t3 = vx(i) / two * (-eight * dl(i) * sq(i) - ph(i) + five * ph(j) + five * ph(k)) * al(i) * al(i);
    RationalExpr t4 = ctx.var(ctx.c()) * vx(i) * (ph(i) - ph(j) - ph(k)) / (two * ph(j) * ph(k));
    RationalExpr t5 = (-vx(i) * ph(i) * Vs(j) * Vs(k) + vx(j) * ph(j) * Vs(i) * Vs(k) + vx(k) * ph(k) * Vs(i) * Vs(j)) /
                      (two * vx(j) * vx(k) * ph(j) * ph(k));
    rules_[ctx.alpha(i).index][i] = t1 + t2 - t3 + t4 - t5;
  }

  const RationalExpr V1 = ctx.var(ctx.V(0));
  auto sq = [&](int n) { return vx(n) * vx(n); };
  rules_[ctx.V(0).index][0] =
      -(V1 / vx(0)) *
      (RationalExpr(2) * sq(0).pow(2) - RationalExpr(3) * sq(0).pow(3) - sq(2) + sq(0) * sq(2) + sq(2).pow(2)) *
      al(0);
  for (int i = 1; i <= 2; ++i) {
    int j = 3 - i;
    rules_[ctx.V(0).index][i] =
        -dl(i) * vx(i) * ph(0) / (sq(i) + sq(j)) * (sq(0) - dl(j) * sq(j)) * V1 * al(i);
  }
}

const std::optional<RationalExpr>& DerivationSystem::rule(VarId gen, int dir) const {
  return rules_.at(gen.index).at(dir);
}

RationalExpr DerivationSystem::apply(const RationalExpr& e, int dir, bool reduce) const {
  if (mode_ != VMode::eliminated) throw std::logic_error("DerivationSystem::apply needs the closed (eliminated) system");
  RationalExpr out;
  for (std::size_t g = 0; g < algebra::kMaxVars; ++g) {
    const auto& r = rules_[g][dir];
    VarId id{std::uint8_t(g)};
    bool occurs = e.numerator().depends_on(id);
    for (const auto& f : e.denominator_factors()) occurs = occurs || f.base.depends_on(id);
    if (!occurs) continue;
    if (!r) {
      if (id == ctx_.c() || id == ctx_.ctilde()) continue;
      throw std::logic_error("DerivationSystem::apply: generator without a rule: " + ctx_.registry().name(id));
    }
    out += e.derivative(id) * *r;
  }
  return reduce ? ctx_.reduce_unit(out) : out;
}

}  // namespace minhyp::verify
