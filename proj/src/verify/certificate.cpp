#include "minhyp/verify/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "minhyp/algebra/text.hpp"
#include "minhyp/verify/coefficients.hpp"
#include "minhyp/verify/context.hpp"

namespace minhyp::verify {

std::string status_label(const CertificateResult& r) {
  switch (r.status) {
    case Status::proved: return r.kind == ClaimKind::equal ? "proved-equal" : "proved-nonzero";
    case Status::counterexample: return "counterexample";
    case Status::failed: return "failed";
    case Status::engine_fault: return "engine-fault";
    case Status::skipped: return "skipped";
  }
  return "?";
}

PointSampler::PointSampler(std::uint64_t seed) : state_(seed) {}

ExactScalar PointSampler::draw() {
  std::mt19937_64 rng(state_);
  state_ = rng();
  long num = long(rng() % 97 + 1), den = long(rng() % 97 + 1);
  return algebra::make_scalar(num, den);
}

std::vector<ExactScalar> PointSampler::next(bool on_unit_quadric) {
  std::vector<ExactScalar> p(algebra::kMaxVars);
  for (auto& x : p) x = draw();
  if (on_unit_quadric) {
    // Lines through (1, 0, 0) with direction (a, b, 1) meet the quadric again
    // at a rational point.
    for (;;) {
      ExactScalar a = draw(), b = draw();
      ExactScalar d = a * a - b * b + 1;
      if (sgn(d) == 0) continue;
      ExactScalar t = -2 * a / d;
      p[0] = 1 + t * a;
      p[1] = t * b;
      p[2] = t;
      if (sgn(p[0]) != 0 && sgn(p[1]) != 0 && sgn(p[2]) != 0) break;
    }
  }
  return p;
}

namespace {

std::vector<std::pair<std::string, std::string>> describe(const std::vector<ExactScalar>& p,
                                                          const algebra::VarRegistry& reg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < reg.size() && i < p.size(); ++i)
    out.emplace_back(reg.name(VarId{std::uint8_t(i)}), p[i].get_str());
  return out;
}

}  // namespace

CertificateResult certify(std::string name, const Claim& claim, const EvalOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CertificateResult r;
  r.name = std::move(name);
  r.kind = claim.kind;
  r.note = claim.note;
  r.lhs_terms = claim.lhs.term_count();
  r.rhs_terms = claim.rhs.term_count();
  const auto& reg = claim.registry ? *claim.registry : symbols().registry();
  const bool unit = claim.reduction == Reduction::unit;
  try {
    bool eval_ok = true;
    std::vector<ExactScalar> bad;
    if (claim.kind == ClaimKind::equal) {
      PointSampler sampler(opts.seed ^ fnv1a64(r.name));
      int attempts = 0;
      while (r.eval_points < opts.points && attempts < 20 * opts.points + 20) {
        ++attempts;
        auto p = sampler.next(unit);
        ExactScalar l, rr;
        try {
          l = claim.lhs.evaluate(p);
          rr = claim.rhs.evaluate(p);
        } catch (const algebra::DivisionByZeroPolynomial&) {
          continue;
        }
        ++r.eval_points;
        if (l != rr) {
          eval_ok = false;
          bad = std::move(p);
          break;
        }
      }
      if (eval_ok && r.eval_points < opts.points) {
        r.status = Status::engine_fault;
        r.detail = "could not find enough admissible evaluation points";
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
      }
    } else {
      r.eval_points = 1;
      try {
        eval_ok = sgn(claim.lhs.evaluate(claim.witness)) != 0;
      } catch (const algebra::DivisionByZeroPolynomial&) {
        eval_ok = false;
      }
      if (!eval_ok) bad = claim.witness;
    }

    RationalExpr residual = claim.kind == ClaimKind::equal ? claim.lhs - claim.rhs : claim.lhs;
    algebra::MultiPoly num = residual.numerator();
    if (unit) num = symbols().reduce_unit(num);
    r.residual_terms = num.size();
    const bool sym_ok = claim.kind == ClaimKind::equal ? num.is_zero() : !num.is_zero();

    if (eval_ok && sym_ok) {
      r.status = Status::proved;
    } else if (!eval_ok && !sym_ok) {
      r.status = Status::counterexample;
      r.point = describe(bad, reg);
      if (claim.kind == ClaimKind::equal) {
        std::vector<algebra::MultiPoly::Term> head(num.terms().begin(),
                                                   num.terms().begin() + std::min<std::size_t>(num.size(), 3));
        r.detail = "sides differ; residual numerator has " + std::to_string(num.size()) +
                   " terms, leading: " + algebra::to_string(algebra::MultiPoly::from_terms(head), reg);
      } else {
        r.detail = "expression vanishes identically";
      }
    } else {
      r.status = Status::engine_fault;
      r.detail = eval_ok ? "evaluation passed but the symbolic residual disagrees"
                         : "symbolic residual agrees but evaluation failed";
      if (!eval_ok) r.point = describe(bad, reg);
    }
  } catch (const std::exception& e) {
    r.status = Status::failed;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace minhyp::verify
