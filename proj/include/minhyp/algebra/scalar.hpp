#pragma once

#include <gmpxx.h>

#include <string>

namespace minhyp::algebra {

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using ExactScalar = mpq_class;
using BigInt = mpz_class;

inline ExactScalar make_scalar(long num, long den = 1) {
  ExactScalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const ExactScalar& q) { return q.get_den() == 1; }

/// "p/q" or "p" for integers.
inline std::string to_string(const ExactScalar& q) { return q.get_str(); }

}  // namespace minhyp::algebra
