#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minhyp/verify/coefficients.hpp"
#include "minhyp/verify/certificate.hpp"
#include "minhyp/verify/context.hpp"
#include "minhyp/verify/derivation.hpp"

namespace minhyp::verify {

/// Everything a certificate may read. Shared read-only across workers.
struct Inputs {
  const SymbolContext& ctx;
  const DerivationSystem& closed;  ///< V2, V3 eliminated
  const DerivationSystem& open;    ///< V2, V3 free (pointwise algebra only)
  const FixtureBank& coefficients;
  const FixtureBank& goldens;

  /// Transcribed entry with V2, V3 replaced by their expressions in V1.
  RationalExpr fx(std::string_view name) const;
  /// Transcribed entry as transcribed.
  const RationalExpr& raw(std::string_view name) const { return coefficients.get(name); }
};

struct CertificateSpec {
  std::string name;
  std::vector<std::string> fixtures;  ///< transcribed entries read
  std::vector<std::string> goldens;   ///< golden entries read
  std::function<Claim(const Inputs&)> build;
};

void add_structure_checks(std::vector<CertificateSpec>& out);
void add_case_checks(std::vector<CertificateSpec>& out);
void add_curvature_checks(std::vector<CertificateSpec>& out);

/// Every certificate, sorted by name.
const std::vector<CertificateSpec>& certificate_catalog();

/// V2 and V3 solved from the (ViVj) relations for the pairs (1,2) and (1,3)
/// by Cramer's rule.
std::pair<RationalExpr, RationalExpr> derive_V2_V3(const SymbolContext& ctx);

/// h_ij = v_j phi_j alpha_i for i != j.
RationalExpr h_from_alpha(const SymbolContext& ctx, int i, int j);

/// The (ViVj) relation v_i(d_j v_j^2 - d_k v_k^2) V_j + v_j(d_i v_i^2 - d_k v_k^2) V_i
/// over free V.
RationalExpr vivj_relation(const SymbolContext& ctx, int i, int j);

/// Resultant in v3 of two transcribed polynomials.
algebra::MultiPoly coefficient_resultant(const Inputs& in, std::string_view p, std::string_view q);

}  // namespace minhyp::verify
