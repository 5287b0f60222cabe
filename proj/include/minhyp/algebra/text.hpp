#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minhyp/algebra/multipoly.hpp"
#include "minhyp/algebra/rational_expr.hpp"
#include "minhyp/algebra/registry.hpp"

namespace minhyp::algebra {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical text: terms in descending graded-lex order, explicit rational
/// coefficients, `*` between factors and `^` for powers, e.g.
/// `-3/4*v1^2*v2 + v3 - 1`. The zero polynomial prints as `0`.
std::string to_string(const MultiPoly& p, const VarRegistry& reg);

/// `(num)/((f1)^e1*(f2)^e2...)`, or the canonical polynomial text when the
/// denominator is trivial.
std::string to_string(const RationalExpr& e, const VarRegistry& reg);

/// Named subexpressions an input may refer to (e.g. `phi1`).
using MacroTable = std::map<std::string, RationalExpr, std::less<>>;

/// Parses an arithmetic expression over registry generators, integers,
/// `+ - * / ^ ( )`, and macro names. Accepts every canonical string.
RationalExpr parse_expr(std::string_view text, const VarRegistry& reg, const MacroTable& macros = {});

/// parse_expr() that additionally requires a polynomial result.
MultiPoly parse_poly(std::string_view text, const VarRegistry& reg, const MacroTable& macros = {});

}  // namespace minhyp::algebra
