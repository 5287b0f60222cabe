#include "minhyp/verify/context.hpp"

namespace minhyp::verify {

SymbolContext::SymbolContext()
    : reg_{"v1", "v2", "v3", "V1", "V2", "V3", "a1", "a2", "a3", "c", "ct"} {
  for (int i = 0; i < 3; ++i) {
    v_[i] = reg_.at("v" + std::to_string(i + 1));
    V_[i] = reg_.at("V" + std::to_string(i + 1));
    alpha_[i] = reg_.at("a" + std::to_string(i + 1));
  }
  c_ = reg_.at("c");
  ct_ = reg_.at("ct");

  auto x = [&](int i) { return MultiPoly::variable(v_[i]); };
  for (int i = 0; i < 3; ++i) {
    MultiPoly d(delta[i]);
    MultiPoly sq = x(i) * x(i);
    phi_[i] = (d - sq) * (d - sq * ExactScalar(3));
  }
  MultiPoly s1 = x(0) * x(0), s2 = x(1) * x(1), s3 = x(2) * x(2);
  unit_ = s1 - s2 + s3 - MultiPoly(1);
  v3_sq_value_ = MultiPoly(1) - s1 + s2;
  theta_ = algebra::parse_poly("-v1^2 + v1^4 + v2^2 - 10*v1^2*v2^2 + 9*v1^4*v2^2 + v2^4 - 9*v1^2*v2^4", reg_);

  RationalExpr V1 = var(V_[0]);
  RationalExpr denom = RationalExpr(x(0)) * RationalExpr(s2 + s3);
  V_elim_[0] = V1;
  V_elim_[1] = RationalExpr(x(1) * (s1 - s3)) * V1 / denom;
  V_elim_[2] = -RationalExpr(x(2) * (s1 + s2)) * V1 / denom;

  MultiPoly cc = MultiPoly::variable(ct_) - MultiPoly::variable(c_);
  V1sq_ = RationalExpr(cc * s1 * (s2 + s3).pow(2)) / RationalExpr(theta_);

  for (int i = 0; i < 3; ++i) macros_["phi" + std::to_string(i + 1)] = RationalExpr(phi_[i]);
  macros_["Theta"] = RationalExpr(theta_);
  macros_["V2e"] = V_elim_[1];
  macros_["V3e"] = V_elim_[2];
}

std::vector<std::pair<VarId, RationalExpr>> SymbolContext::V_elimination() const {
  return {{V_[1], V_elim_[1]}, {V_[2], V_elim_[2]}};
}

MultiPoly SymbolContext::reduce_unit(const MultiPoly& p) const {
  return algebra::eliminate_power(p, v_[2], 2, v3_sq_value_);
}

RationalExpr SymbolContext::reduce_unit(const RationalExpr& e) const {
  return e.map_polys([this](const MultiPoly& p) { return reduce_unit(p); });
}

RationalExpr SymbolContext::eliminate_V1_squared(const RationalExpr& e) const {
  const VarId V1 = V_[0];
  auto rewrite = [&](const MultiPoly& p) {
    auto coeffs = p.coefficients_in(V1);
    RationalExpr out, sq_power(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k >= 2 && k % 2 == 0) sq_power = sq_power * V1sq_;
      if (coeffs[k].is_zero()) continue;
      RationalExpr term = RationalExpr(coeffs[k]) * sq_power;
      if (k % 2) term = term * var(V1);
      out += term;
    }
    return out;
  };
  RationalExpr out = rewrite(e.numerator());
  for (const auto& f : e.denominator_factors()) out = out / rewrite(f.base).pow(int(f.exp));
  return out;
}

const SymbolContext& symbols() {
  static const SymbolContext ctx;
  return ctx;
}

}  // namespace minhyp::verify
