#pragma once

#include <gmpxx.h>

#include <string>

namespace virmod {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// "a/b", or "a" when the denominator is one.
inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(const std::string& text);

Integer floor(const Rational& x);

}  // namespace virmod
