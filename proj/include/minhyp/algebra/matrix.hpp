#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "minhyp/algebra/multipoly.hpp"
#include "minhyp/algebra/rational_expr.hpp"

namespace minhyp::algebra {

template <class T>
using Matrix3 = std::array<std::array<T, 3>, 3>;
template <class T>
using Matrix2 = std::array<std::array<T, 2>, 2>;

/// Square matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

RationalExpr det2(const Matrix2<RationalExpr>& m);

/// Cofactor expansion along the first row.
RationalExpr det3(const Matrix3<RationalExpr>& m);

/// Fraction-free (Bareiss) elimination; every intermediate division is exact.
MultiPoly determinant(PolyMatrix m);

/// Sylvester matrix of p and q with respect to x, of size deg_x p + deg_x q.
PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, VarId x);

/// Resultant of p and q with respect to x. Throws std::invalid_argument when
/// either input has degree zero in x.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, VarId x);

}  // namespace minhyp::algebra
