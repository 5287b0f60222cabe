#include "minhyp/algebra/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace minhyp::algebra {

RationalExpr det2(const Matrix2<RationalExpr>& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

RationalExpr det3(const Matrix3<RationalExpr>& m) {
  RationalExpr minor0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  RationalExpr minor1 = m[1][0] * m[2][2] - m[1][2] * m[2][0];
  RationalExpr minor2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  return m[0][0] * minor0 - m[0][1] * minor1 + m[0][2] * minor2;
}

MultiPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (prev.is_constant()) {
          m[i][j] = t * ExactScalar(1 / prev.constant_term());
        } else {
          auto q = exact_quotient(t, prev);
          if (!q) throw std::logic_error("determinant: inexact Bareiss division");
          m[i][j] = std::move(*q);
        }
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, VarId x) {
  auto a = p.coefficients_in(x);
  auto b = q.coefficients_in(x);
  const std::size_t dp = a.size() - 1, dq = b.size() - 1;
  if (dp == 0 || dq == 0) throw std::invalid_argument("resultant: input has degree zero in the variable");
  const std::size_t n = dp + dq;
  PolyMatrix s(n, std::vector<MultiPoly>(n));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i) s[r][r + i] = a[dp - i];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i) s[dq + r][r + i] = b[dq - i];
  return s;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, VarId x) { return determinant(sylvester_matrix(p, q, x)); }

}  // namespace minhyp::algebra
