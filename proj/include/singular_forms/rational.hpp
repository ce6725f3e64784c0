#pragma once

#include <gmpxx.h>

#include <string>

namespace sforms {

// mpq_class keeps numerator/denominator canonical (den > 0, gcd 1) as long as
// every value is built through its arithmetic or canonicalize()'d after set_str.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace sforms
