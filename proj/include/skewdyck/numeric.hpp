#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace skewdyck {

using Integer = mpz_class;
using Rational = mpq_class;

// Ring hooks used by the generic series code. Every coefficient ring
// provides is_zero, is_unit, inverse and to_string as free functions.

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_unit(const Integer& x) { return x == 1 || x == -1; }
inline bool is_unit(const Rational& x) { return sgn(x) != 0; }

inline Integer inverse(const Integer& x) {
  if (!is_unit(x)) throw std::domain_error("integer is not invertible");
  return x;
}

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw std::domain_error("division by zero");
  Rational r = 1 / x;
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Decimal "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Parses "p" or "p/q" into a canonical rational; throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace skewdyck
