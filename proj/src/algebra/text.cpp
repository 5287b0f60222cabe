#include "minhyp/algebra/text.hpp"

#include <cctype>
#include <sstream>

namespace minhyp::algebra {

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, const VarRegistry& reg, bool leading_star) {
  bool first = !leading_star;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = m.exp[i];
    if (!e) continue;
    if (i >= reg.size()) throw std::out_of_range("monomial uses a generator missing from the registry");
    if (!first) os << '*';
    first = false;
    os << reg.name(VarId{std::uint8_t(i)});
    if (e > 1) os << '^' << e;
  }
}

class Parser {
 public:
  Parser(std::string_view text, const VarRegistry& reg, const MacroTable& macros)
      : text_(text), reg_(reg), macros_(macros) {}

  RationalExpr parse() {
    RationalExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  RationalExpr expr() {
    skip_ws();
    RationalExpr acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      get();
      RationalExpr rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '*' && c != '/') return acc;
      get();
      RationalExpr rhs = unary();
      if (c == '*') {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) fail("division by zero");
        acc = acc / rhs;
      }
    }
  }

  RationalExpr unary() {
    skip_ws();
    if (peek() == '-') {
      get();
      return -unary();
    }
    if (peek() == '+') {
      get();
      return unary();
    }
    return power();
  }

  RationalExpr power() {
    RationalExpr base = atom();
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (get() - '0');
      if (e > 100000) fail("exponent too large");
    }
    return base.pow(neg ? -int(e) : int(e));
  }

  RationalExpr atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      RationalExpr e = expr();
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      return RationalExpr(MultiPoly(ExactScalar(BigInt(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto it = macros_.find(name); it != macros_.end()) return it->second;
      if (auto id = reg_.find(name)) return RationalExpr(MultiPoly::variable(*id));
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail(c ? std::string("unexpected character '") + c + "'" : "unexpected end of input");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  const VarRegistry& reg_;
  const MacroTable& macros_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const MultiPoly& p, const VarRegistry& reg) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.coef) < 0;
    ExactScalar mag = abs(t.coef);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << mag.get_str();
    } else if (mag == 1) {
      append_monomial(os, t.mono, reg, false);
    } else {
      os << mag.get_str();
      append_monomial(os, t.mono, reg, true);
    }
  }
  return os.str();
}

std::string to_string(const RationalExpr& e, const VarRegistry& reg) {
  if (e.is_polynomial()) return to_string(e.numerator(), reg);
  std::ostringstream os;
  os << '(' << to_string(e.numerator(), reg) << ")/(";
  bool first = true;
  for (const auto& f : e.denominator_factors()) {
    if (!first) os << '*';
    first = false;
    os << '(' << to_string(f.base, reg) << ')';
    if (f.exp > 1) os << '^' << f.exp;
  }
  os << ')';
  return os.str();
}

RationalExpr parse_expr(std::string_view text, const VarRegistry& reg, const MacroTable& macros) {
  return Parser(text, reg, macros).parse();
}

MultiPoly parse_poly(std::string_view text, const VarRegistry& reg, const MacroTable& macros) {
  RationalExpr e = parse_expr(text, reg, macros).reduced();
  if (!e.is_polynomial()) throw ParseError("expression is not a polynomial");
  return e.numerator();
}

}  // namespace minhyp::algebra
