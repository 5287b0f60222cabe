#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "minhyp/algebra/registry.hpp"

namespace minhyp::algebra {

/// Dense exponent vector, one slot per registry generator.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  static Monomial of(VarId v, unsigned power = 1) {
    Monomial m;
    m.exp[v.index] = checked(power);
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  unsigned operator[](VarId v) const { return exp[v.index]; }

  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = checked(unsigned(a.exp[i]) + b.exp[i]);
    return r;
  }

  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::uint16_t(a.exp[i] - b.exp[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  static std::uint16_t checked(unsigned e) {
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    return static_cast<std::uint16_t>(e);
  }
};

/// Graded lexicographic: higher total degree first, ties broken by the
/// exponent of the earliest registered generator. Returns true when a sorts
/// before b in canonical (descending) order.
inline bool grlex_before(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct GrlexBefore {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_before(a, b); }
};

}  // namespace minhyp::algebra
