#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minhyp/algebra/rational_expr.hpp"
#include "minhyp/algebra/registry.hpp"

namespace minhyp::verify {

using algebra::ExactScalar;
using algebra::RationalExpr;

enum class Status {
  proved,          ///< both the evaluation and the symbolic path agree the claim holds
  counterexample,  ///< both paths agree it fails; a witness point is attached
  failed,          ///< the claim could not be built (fixture, division by zero, ...)
  engine_fault,    ///< evaluation and symbolic paths disagree
  skipped,         ///< an input fixture is unhealthy
};

/// What a certificate asserts.
enum class ClaimKind {
  equal,    ///< lhs == rhs
  nonzero,  ///< lhs is not the zero polynomial
};

/// Which relation the symbolic residual is reduced by before the zero test.
enum class Reduction {
  none,
  unit,  ///< v3^2 -> 1 - v1^2 + v2^2 in the standard symbol context
};

struct Claim {
  ClaimKind kind = ClaimKind::equal;
  RationalExpr lhs;
  RationalExpr rhs;
  Reduction reduction = Reduction::none;
  /// Registry the expressions live in; null means the standard symbol context.
  const algebra::VarRegistry* registry = nullptr;
  /// Nonzero claims only: a stored point where lhs must not vanish.
  std::vector<ExactScalar> witness;
  std::string note;
};

struct EvalOptions {
  int points = 20;
  std::uint64_t seed = 24301;
};

struct CertificateResult {
  std::string name;
  Status status = Status::failed;
  ClaimKind kind = ClaimKind::equal;
  std::string detail;
  std::string note;
  /// Generator name -> value at the failing point.
  std::vector<std::pair<std::string, std::string>> point;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::size_t residual_terms = 0;
  int eval_points = 0;
  double seconds = 0;

  bool passed() const { return status == Status::proved; }
};

/// "proved-equal", "proved-nonzero", "counterexample", ...
std::string status_label(const CertificateResult& r);

/// Random rational point with numerators and denominators in [1, 97]. With
/// `on_unit_quadric` the first three coordinates are replaced by a rational
/// point of v1^2 - v2^2 + v3^2 = 1.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed);
  std::vector<ExactScalar> next(bool on_unit_quadric);

 private:
  ExactScalar draw();
  std::uint64_t state_;
};

/// Runs both paths on a claim: exact evaluation at `opts.points` random
/// rational points, then the symbolic residual test. Never throws.
CertificateResult certify(std::string name, const Claim& claim, const EvalOptions& opts = {});

}  // namespace minhyp::verify
