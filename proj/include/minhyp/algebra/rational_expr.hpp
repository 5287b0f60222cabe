#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minhyp/algebra/multipoly.hpp"

namespace minhyp::algebra {

struct DivisionByZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

/// Quotient of two polynomials.
///
/// The denominator is kept as a product of primitive polynomial factors
/// (positive leading coefficient, coprime integer coefficients) raised to
/// positive powers; every scalar lives in the numerator. Sums take the
/// factor-wise least common multiple, so expressions built from a fixed set
/// of atomic denominators (v_i, phi_i, v_2^2 + v_3^2, ...) never grow
/// spurious denominator products. No polynomial GCD is taken; equality is
/// decided by cross-multiplication.
class RationalExpr {
 public:
  struct Factor {
    MultiPoly base;
    unsigned exp = 1;
  };

  RationalExpr() = default;
  RationalExpr(MultiPoly num) : num_(std::move(num)) {}  // NOLINT(implicit)
  RationalExpr(const ExactScalar& c) : num_(c) {}        // NOLINT(implicit)
  RationalExpr(long c) : num_(c) {}                      // NOLINT(implicit)

  /// num / den, den taken as a single factor. Throws DivisionByZeroPolynomial.
  static RationalExpr quotient(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  /// Expanded product of the denominator factors.
  MultiPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Number of numerator terms plus expanded-denominator terms.
  std::size_t term_count() const;

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr& operator+=(const RationalExpr& b) { return *this = *this + b; }
  RationalExpr& operator-=(const RationalExpr& b) { return *this = *this - b; }
  RationalExpr& operator*=(const RationalExpr& b) { return *this = *this * b; }

  RationalExpr pow(int n) const;
  RationalExpr inverse() const;

  /// Formal partial derivative (quotient rule applied factor by factor).
  RationalExpr derivative(VarId v) const;

  /// Throws DivisionByZeroPolynomial if the denominator vanishes at the point.
  ExactScalar evaluate(std::span<const ExactScalar> point) const;

  /// Cancels denominator factors that divide the numerator exactly. This is
  /// the optional readability pass; it never changes the value.
  RationalExpr reduced() const;

  /// Applies a polynomial map to the numerator and to each denominator base
  /// (e.g. reduction modulo a relation). Throws DivisionByZeroPolynomial if a
  /// base maps to zero.
  template <class F>
  RationalExpr map_polys(F&& f) const {
    RationalExpr r(f(num_));
    for (const auto& fac : den_) r = r / RationalExpr(f(fac.base)).pow(int(fac.exp));
    return r;
  }

  friend bool operator==(const RationalExpr& a, const RationalExpr& b) { return (a - b).is_zero(); }

 private:
  void divide_by_factor(const MultiPoly& base, unsigned exp);
  // pp must already be primitive with positive leading coefficient.
  void insert_factor(MultiPoly pp, unsigned exp);
  static RationalExpr add_impl(const RationalExpr& a, const RationalExpr& b, bool subtract);

  MultiPoly num_;
  std::vector<Factor> den_;
};

/// Simultaneous substitution of generators by rational expressions. The
/// right-hand sides are not substituted again.
RationalExpr substitute(const RationalExpr& e, std::span<const std::pair<VarId, RationalExpr>> bindings);

}  // namespace minhyp::algebra
