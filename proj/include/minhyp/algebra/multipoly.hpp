#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "minhyp/algebra/monomial.hpp"
#include "minhyp/algebra/scalar.hpp"

namespace minhyp::algebra {

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in canonical (descending graded-lex) order with nonzero
/// coefficients and unique monomials, so structural equality is polynomial
/// equality. Values are immutable once built; every operation returns a new
/// polynomial.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    ExactScalar coef;
  };

  MultiPoly() = default;
  MultiPoly(const ExactScalar& constant);  // NOLINT(implicit)
  MultiPoly(long constant) : MultiPoly(ExactScalar(constant)) {}  // NOLINT(implicit)

  static MultiPoly variable(VarId v, unsigned power = 1);
  static MultiPoly monomial(const Monomial& m, const ExactScalar& coef);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the empty monomial.
  ExactScalar constant_term() const;
  ExactScalar coefficient(const Monomial& m) const;
  /// Highest term in canonical order; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree(VarId v) const;
  bool depends_on(VarId v) const { return degree(v) > 0; }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const ExactScalar& s);
  friend MultiPoly operator*(const ExactScalar& s, const MultiPoly& a) { return a * s; }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly pow(unsigned n) const;
  MultiPoly derivative(VarId v) const;

  /// `point[i]` is the value of generator i; shorter spans leave the rest
  /// unbound, which is an error only if such a generator occurs.
  ExactScalar evaluate(std::span<const ExactScalar> point) const;

  /// Coefficients as a polynomial in v: element k multiplies v^k.
  std::vector<MultiPoly> coefficients_in(VarId v) const;

  /// Positive rational c such that this / c has coprime integer coefficients.
  ExactScalar content() const;
  /// this / content(), sign-normalized so the leading coefficient is positive.
  MultiPoly primitive_part() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  explicit MultiPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

struct PolyDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Multivariate division by a single divisor in graded-lex order. The
/// remainder is zero exactly when `divisor` divides `dividend`.
PolyDivision divide(const MultiPoly& dividend, const MultiPoly& divisor);

/// dividend / divisor when the division is exact, nullopt otherwise.
std::optional<MultiPoly> exact_quotient(const MultiPoly& dividend, const MultiPoly& divisor);

/// Rewrites every occurrence of v^power (and higher powers) with `replacement`
/// until v only appears with exponent below `power`. With a replacement free
/// of v this is reduction modulo the ideal (v^power - replacement).
MultiPoly eliminate_power(const MultiPoly& p, VarId v, unsigned power, const MultiPoly& replacement);

/// Simultaneous polynomial substitution of generators.
MultiPoly substitute(const MultiPoly& p, std::span<const std::pair<VarId, MultiPoly>> bindings);

}  // namespace minhyp::algebra
