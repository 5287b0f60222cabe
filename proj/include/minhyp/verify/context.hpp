#pragma once

#include <array>
#include <utility>
#include <vector>

#include "minhyp/algebra/multipoly.hpp"
#include "minhyp/algebra/rational_expr.hpp"
#include "minhyp/algebra/registry.hpp"
#include "minhyp/algebra/text.hpp"

namespace minhyp::verify {

using algebra::ExactScalar;
using algebra::MultiPoly;
using algebra::RationalExpr;
using algebra::VarId;

/// The generator set, the signature (1, -1, 1), and the algebraic
/// constraints every symbolic certificate is stated against.
///
/// Registry order: v1 v2 v3 V1 V2 V3 a1 a2 a3 c ct. V2 and V3 are free
/// generators; wherever the holonomic system is closed they are replaced by
/// their expressions in V1 (see v_cap()).
class SymbolContext {
 public:
  SymbolContext();

  const algebra::VarRegistry& registry() const { return reg_; }

  VarId v(int i) const { return v_[i]; }          ///< i in {0,1,2}
  VarId V(int i) const { return V_[i]; }          ///< free V_i
  VarId alpha(int i) const { return alpha_[i]; }  ///< i in {0,1,2}
  VarId c() const { return c_; }
  VarId ctilde() const { return ct_; }

  static constexpr std::array<int, 3> delta{1, -1, 1};

  RationalExpr var(VarId id) const { return MultiPoly::variable(id); }

  /// phi_i = (delta_i - v_i^2)(delta_i - 3 v_i^2).
  const MultiPoly& phi(int i) const { return phi_[i]; }
  /// Theta of the Theta-relation, a polynomial in v1, v2.
  const MultiPoly& theta() const { return theta_; }
  /// Sum delta_i v_i^2 - 1.
  const MultiPoly& unit_relation() const { return unit_; }

  /// V_i with V2, V3 eliminated in favour of V1 via the minimality
  /// constraints; V_cap(0) is just V1.
  const RationalExpr& V_cap(int i) const { return V_elim_[i]; }

  /// Bindings V2 -> ..., V3 -> ... for substitute().
  std::vector<std::pair<VarId, RationalExpr>> V_elimination() const;

  /// V1^2 -> (ct - c) v1^2 (v2^2 + v3^2)^2 / Theta.
  const RationalExpr& V1_squared_value() const { return V1sq_; }

  /// Reduces a polynomial modulo the unit relation by rewriting
  /// v3^2 -> 1 - v1^2 + v2^2.
  MultiPoly reduce_unit(const MultiPoly& p) const;
  RationalExpr reduce_unit(const RationalExpr& e) const;

  /// Rewrites even powers of V1 with V1_squared_value(); odd powers keep one
  /// factor of V1.
  RationalExpr eliminate_V1_squared(const RationalExpr& e) const;

  /// Macro table for fixture parsing: phi1..phi3, Theta, V2e, V3e.
  const algebra::MacroTable& macros() const { return macros_; }

 private:
  algebra::VarRegistry reg_;
  std::array<VarId, 3> v_{}, V_{}, alpha_{};
  VarId c_{}, ct_{};
  std::array<MultiPoly, 3> phi_;
  MultiPoly theta_, unit_, v3_sq_value_;
  std::array<RationalExpr, 3> V_elim_;
  RationalExpr V1sq_;
  algebra::MacroTable macros_;
};

/// Shared immutable instance.
const SymbolContext& symbols();

}  // namespace minhyp::verify
