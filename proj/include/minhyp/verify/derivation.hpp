#pragma once

#include <array>
#include <optional>

#include "minhyp/verify/context.hpp"

namespace minhyp::verify {

/// How V2 and V3 enter the right-hand sides.
enum class VMode {
  eliminated,  ///< replaced by their expressions in V1 (closed system)
  free,        ///< kept as independent generators (only for pointwise algebra)
};

/// The reduced holonomic system: for each generator g in
/// {v1, v2, v3, V1, a1, a2, a3} and coordinate direction u_j a rational
/// expression for dg/du_j. c and ct are inert (all derivatives zero).
class DerivationSystem {
 public:
  explicit DerivationSystem(const SymbolContext& ctx, VMode mode = VMode::eliminated);

  /// Right-hand side for d(gen)/du_dir, or nullopt for an inert generator.
  const std::optional<RationalExpr>& rule(VarId gen, int dir) const;

  /// Total derivative along u_dir by the chain rule (eliminated mode only).
  /// With `reduce` set,
  /// intermediate numerators are reduced modulo the unit relation, which
  /// the system preserves.
  RationalExpr apply(const RationalExpr& e, int dir, bool reduce = true) const;

  /// The stated right-hand side of d(alpha_i)/du_i.
  const RationalExpr& alpha_diag(int i) const { return *rules_[ctx_.alpha(i).index][i]; }

  const SymbolContext& context() const { return ctx_; }

 private:
  const SymbolContext& ctx_;
  VMode mode_;
  std::array<std::array<std::optional<RationalExpr>, 3>, algebra::kMaxVars> rules_;
};

}  // namespace minhyp::verify
