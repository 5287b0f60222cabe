#include "minhyp/algebra/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace minhyp::algebra {

namespace {

bool term_before(const MultiPoly::Term& a, const MultiPoly::Term& b) { return grlex_before(a.mono, b.mono); }

// Merge of two canonical term lists, b scaled by sign.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                   bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_before(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_before(b[j].mono, a[i].mono)) {
      out.push_back(b[j]);
      if (subtract) out.back().coef = -out.back().coef;
      ++j;
    } else {
      ExactScalar s = subtract ? ExactScalar(a[i].coef - b[j].coef) : ExactScalar(a[i].coef + b[j].coef);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const ExactScalar& constant) {
  if (sgn(constant) != 0) terms_.push_back({Monomial{}, constant});
}

MultiPoly MultiPoly::variable(VarId v, unsigned power) { return monomial(Monomial::of(v, power), ExactScalar(1)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const ExactScalar& coef) {
  MultiPoly p;
  if (sgn(coef) != 0) p.terms_.push_back({m, coef});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return MultiPoly(std::move(out));
}

ExactScalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return ExactScalar(0);
}

ExactScalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_before(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return ExactScalar(0);
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MultiPoly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[v]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return MultiPoly(merge(a.terms_, b.terms_, false)); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return MultiPoly(merge(a.terms_, b.terms_, true)); }

MultiPoly operator*(const MultiPoly& a, const ExactScalar& s) {
  if (sgn(s) == 0) return {};
  MultiPoly r = a;
  for (auto& t : r.terms_) t.coef *= s;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.size() == 1 ? b : a;
    std::vector<MultiPoly::Term> out;
    out.reserve(other.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& t : other.terms_) out.push_back({t.mono * single.mono, t.coef * single.coef});
    return MultiPoly(std::move(out));
  }
  std::unordered_map<Monomial, ExactScalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  ExactScalar prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.coef.get_mpq_t(), tb.coef.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_before);
  return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(VarId v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[v.index] = std::uint16_t(e - 1);
    out.push_back({m, t.coef * e});
  }
  // Lowering one exponent can reorder terms of equal degree.
  return from_terms(std::move(out));
}

ExactScalar MultiPoly::evaluate(std::span<const ExactScalar> point) const {
  // Per-variable power cache keeps this linear in the term count.
  std::array<std::vector<ExactScalar>, kMaxVars> powers;
  ExactScalar sum(0), term;
  for (const auto& t : terms_) {
    term = t.coef;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exp[i];
      if (!e) continue;
      if (i >= point.size()) throw std::out_of_range("evaluate: generator without a value");
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(ExactScalar(1));
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      term *= cache[e];
    }
    sum += term;
  }
  return sum;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m[v];
    m.exp[v.index] = 0;
    buckets[e].push_back({m, t.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

ExactScalar MultiPoly::content() const {
  if (terms_.empty()) return ExactScalar(0);
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  ExactScalar c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return {};
  ExactScalar c = content();
  if (sgn(terms_.front().coef) < 0) c = -c;
  return *this * ExactScalar(1 / c);
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

PolyDivision divide(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::map<Monomial, ExactScalar, GrlexBefore> work;
  for (const auto& t : dividend.terms()) work.emplace(t.mono, t.coef);
  const auto& lead = divisor.leading();
  std::vector<MultiPoly::Term> quot, rem;
  ExactScalar factor, delta;
  while (!work.empty()) {
    auto top = work.begin();
    if (!lead.mono.divides(top->first)) {
      rem.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    Monomial qm = top->first / lead.mono;
    factor = top->second / lead.coef;
    quot.push_back({qm, factor});
    for (const auto& t : divisor.terms()) {
      delta = factor * t.coef;
      auto [it, inserted] = work.try_emplace(t.mono * qm);
      it->second -= delta;
      if (sgn(it->second) == 0) work.erase(it);
    }
  }
  // Quotient and remainder terms were emitted in descending order.
  return {MultiPoly::from_terms(std::move(quot)), MultiPoly::from_terms(std::move(rem))};
}

std::optional<MultiPoly> exact_quotient(const MultiPoly& dividend, const MultiPoly& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

MultiPoly eliminate_power(const MultiPoly& p, VarId v, unsigned power, const MultiPoly& replacement) {
  if (power == 0) throw std::invalid_argument("eliminate_power: power must be positive");
  if (replacement.depends_on(v)) throw std::invalid_argument("eliminate_power: replacement mentions the variable");
  if (p.degree(v) < power) return p;
  std::vector<MultiPoly> rep_powers{MultiPoly(1)};
  // Group terms by how many factors of v^power they carry.
  std::vector<std::vector<MultiPoly::Term>> groups(p.degree(v) / power + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[v];
    m.exp[v.index] = std::uint16_t(e % power);
    groups[e / power].push_back({m, t.coef});
  }
  MultiPoly out;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (groups[k].empty()) continue;
    while (rep_powers.size() <= k) rep_powers.push_back(rep_powers.back() * replacement);
    out += MultiPoly::from_terms(std::move(groups[k])) * rep_powers[k];
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, std::span<const std::pair<VarId, MultiPoly>> bindings) {
  std::array<const MultiPoly*, kMaxVars> bound{};
  for (const auto& [v, value] : bindings) bound[v.index] = &value;
  std::array<std::vector<MultiPoly>, kMaxVars> powers;
  std::unordered_map<Monomial, std::vector<MultiPoly::Term>, MonomialHash> by_bound_part;
  // Split each monomial into free and bound parts so every distinct bound
  // part is expanded only once.
  for (const auto& t : p.terms()) {
    Monomial free_part = t.mono, bound_part;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (bound[i]) {
        bound_part.exp[i] = free_part.exp[i];
        free_part.exp[i] = 0;
      }
    by_bound_part[bound_part].push_back({free_part, t.coef});
  }
  MultiPoly out;
  for (auto& [bp, free_terms] : by_bound_part) {
    MultiPoly factor(1);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = bp.exp[i];
      if (!e) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultiPoly(1));
      while (cache.size() <= e) cache.push_back(cache.back() * *bound[i]);
      factor = factor * cache[e];
    }
    out += MultiPoly::from_terms(std::move(free_terms)) * factor;
  }
  return out;
}

}  // namespace minhyp::algebra
