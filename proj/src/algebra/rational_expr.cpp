#include "minhyp/algebra/rational_expr.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace minhyp::algebra {

namespace {

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (!(ta[i].mono == tb[i].mono)) return grlex_before(ta[i].mono, tb[i].mono);
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return ta.size() < tb.size();
}

using FactorList = std::vector<RationalExpr::Factor>;

const RationalExpr::Factor* find_factor(const FactorList& list, const MultiPoly& base) {
  for (const auto& f : list)
    if (f.base == base) return &f;
  return nullptr;
}

// Numerator multiplier that lifts a denominator `have` to `target`.
MultiPoly lift(const FactorList& have, const FactorList& target) {
  MultiPoly m(1);
  for (const auto& t : target) {
    const auto* h = find_factor(have, t.base);
    unsigned missing = t.exp - (h ? h->exp : 0u);
    if (missing) m = m * t.base.pow(missing);
  }
  return m;
}

bool same_factors(const FactorList& a, const FactorList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exp != b[i].exp || !(a[i].base == b[i].base)) return false;
  return true;
}

}  // namespace

RationalExpr RationalExpr::quotient(const MultiPoly& num, const MultiPoly& den) {
  RationalExpr r(num);
  r.divide_by_factor(den, 1);
  return r;
}

void RationalExpr::divide_by_factor(const MultiPoly& base, unsigned exp) {
  if (exp == 0) return;
  if (base.is_zero()) throw DivisionByZeroPolynomial("denominator is the zero polynomial");
  if (base.size() == 1) {
    // Scalar times monomial: split into one factor per generator.
    const auto& t = base.leading();
    ExactScalar se = 1;
    for (unsigned i = 0; i < exp; ++i) se *= t.coef;
    if (se != 1) num_ = num_ * ExactScalar(1 / se);
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i]) insert_factor(MultiPoly::variable(VarId{std::uint8_t(i)}), t.mono.exp[i] * exp);
    return;
  }
  MultiPoly pp = base.primitive_part();
  ExactScalar s = base.leading().coef / pp.leading().coef;  // base = s * pp
  if (s != 1) {
    ExactScalar se = 1;
    for (unsigned i = 0; i < exp; ++i) se *= s;
    num_ = num_ * ExactScalar(1 / se);
  }
  insert_factor(std::move(pp), exp);
}

void RationalExpr::insert_factor(MultiPoly pp, unsigned exp) {
  for (auto& f : den_) {
    if (f.base == pp) {
      f.exp += exp;
      return;
    }
  }
  auto pos = std::lower_bound(den_.begin(), den_.end(), pp,
                              [](const Factor& f, const MultiPoly& key) { return poly_less(f.base, key); });
  den_.insert(pos, Factor{std::move(pp), exp});
}

MultiPoly RationalExpr::denominator() const {
  MultiPoly d(1);
  for (const auto& f : den_) d = d * f.base.pow(f.exp);
  return d;
}

std::size_t RationalExpr::term_count() const {
  std::size_t n = num_.size();
  for (const auto& f : den_) n += f.base.size();
  return n;
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpr RationalExpr::add_impl(const RationalExpr& a, const RationalExpr& b, bool subtract) {
  const auto& da = a.den_;
  const auto& db = b.den_;
  RationalExpr r;
  if (same_factors(da, db)) {
    r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
    if (!r.num_.is_zero()) r.den_ = da;
    return r;
  }
  // Factor-wise lcm; both lists are already normalized and sorted.
  FactorList lcm = da;
  for (const auto& f : db) {
    auto it = std::find_if(lcm.begin(), lcm.end(), [&](const auto& g) { return g.base == f.base; });
    if (it == lcm.end())
      lcm.insert(std::lower_bound(lcm.begin(), lcm.end(), f.base,
                                  [](const Factor& g, const MultiPoly& key) { return poly_less(g.base, key); }),
                 f);
    else
      it->exp = std::max(it->exp, f.exp);
  }
  MultiPoly na = a.num_ * lift(da, lcm);
  MultiPoly nb = b.num_ * lift(db, lcm);
  r.num_ = subtract ? na - nb : na + nb;
  if (!r.num_.is_zero()) r.den_ = std::move(lcm);
  return r;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return RationalExpr::add_impl(a, b, false);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return RationalExpr::add_impl(a, b, true);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  RationalExpr r(a.num_ * b.num_);
  if (r.is_zero()) return r;
  r.den_ = a.den_;
  for (const auto& f : b.den_) r.divide_by_factor(f.base, f.exp);
  return r;
}

RationalExpr RationalExpr::inverse() const {
  if (num_.is_zero()) throw DivisionByZeroPolynomial("inverse of the zero expression");
  RationalExpr r(denominator());
  r.divide_by_factor(num_, 1);
  return r;
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.num_.is_zero()) throw DivisionByZeroPolynomial("division by the zero expression");
  if (b.den_.empty()) {
    RationalExpr r = a;
    r.divide_by_factor(b.num_, 1);
    return r;
  }
  return a * b.inverse();
}

RationalExpr RationalExpr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalExpr r(num_.pow(unsigned(n)));
  if (n == 0) return r;
  r.den_ = den_;
  for (auto& f : r.den_) f.exp *= unsigned(n);
  return r;
}

RationalExpr RationalExpr::derivative(VarId v) const {
  // d(N / prod f^e) = (N' prod_S f - N sum_{i in S} e_i f_i' prod_{S\i} f) / prod f^(e + [f in S])
  // where S holds the factors that depend on v.
  std::vector<std::size_t> dependent;
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i].base.depends_on(v)) dependent.push_back(i);
  if (dependent.empty()) {
    RationalExpr r = *this;
    r.num_ = num_.derivative(v);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }
  MultiPoly all(1);
  for (auto i : dependent) all = all * den_[i].base;
  MultiPoly top = num_.derivative(v) * all;
  for (auto i : dependent) {
    MultiPoly others(1);
    for (auto j : dependent)
      if (j != i) others = others * den_[j].base;
    top -= num_ * den_[i].base.derivative(v) * others * ExactScalar(den_[i].exp);
  }
  RationalExpr r(top);
  if (r.is_zero()) return r;
  r.den_ = den_;
  for (auto i : dependent) r.den_[i].exp += 1;
  return r;
}

ExactScalar RationalExpr::evaluate(std::span<const ExactScalar> point) const {
  ExactScalar d = 1;
  for (const auto& f : den_) {
    ExactScalar b = f.base.evaluate(point);
    if (sgn(b) == 0) throw DivisionByZeroPolynomial("denominator vanishes at the evaluation point");
    for (unsigned k = 0; k < f.exp; ++k) d *= b;
  }
  return num_.evaluate(point) / d;
}

RationalExpr RationalExpr::reduced() const {
  RationalExpr r = *this;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  for (auto& f : r.den_) {
    while (f.exp > 0) {
      auto q = exact_quotient(r.num_, f.base);
      if (!q) break;
      r.num_ = std::move(*q);
      --f.exp;
    }
  }
  std::erase_if(r.den_, [](const Factor& f) { return f.exp == 0; });
  return r;
}

namespace {

RationalExpr substitute_poly(const MultiPoly& p, const std::array<const RationalExpr*, kMaxVars>& bound,
                             std::array<std::vector<RationalExpr>, kMaxVars>& powers) {
  std::unordered_map<Monomial, std::vector<MultiPoly::Term>, MonomialHash> groups;
  for (const auto& t : p.terms()) {
    Monomial free_part = t.mono, bound_part;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (bound[i]) {
        bound_part.exp[i] = free_part.exp[i];
        free_part.exp[i] = 0;
      }
    groups[bound_part].push_back({free_part, t.coef});
  }
  // Deterministic accumulation order.
  std::vector<Monomial> keys;
  keys.reserve(groups.size());
  for (const auto& [k, _] : groups) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), grlex_before);
  RationalExpr out;
  for (const auto& bp : keys) {
    RationalExpr factor(1);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = bp.exp[i];
      if (!e) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(RationalExpr(1));
      while (cache.size() <= e) cache.push_back(cache.back() * *bound[i]);
      factor = factor * cache[e];
    }
    out += RationalExpr(MultiPoly::from_terms(std::move(groups[bp]))) * factor;
  }
  return out;
}

}  // namespace

RationalExpr substitute(const RationalExpr& e, std::span<const std::pair<VarId, RationalExpr>> bindings) {
  std::array<const RationalExpr*, kMaxVars> bound{};
  for (const auto& [v, value] : bindings) bound[v.index] = &value;
  std::array<std::vector<RationalExpr>, kMaxVars> powers;
  RationalExpr out = substitute_poly(e.numerator(), bound, powers);
  for (const auto& f : e.denominator_factors()) {
    RationalExpr b = substitute_poly(f.base, bound, powers);
    if (b.is_zero()) throw DivisionByZeroPolynomial("substitution sends a denominator factor to zero");
    out = out / b.pow(int(f.exp));
  }
  return out;
}

}  // namespace minhyp::algebra
