#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "crinv/errors.hpp"

namespace crinv {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. cpp_rational already maintains the
/// invariants we need: lowest terms, positive denominator, zero = 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// m! as an exact integer.
inline Integer factorial(unsigned m) {
  Integer r = 1;
  for (unsigned i = 2; i <= m; ++i) r *= i;
  return r;
}

/// base^e for non-negative integer exponents (0^0 = 1).
inline Integer int_pow(const Integer& base, unsigned e) {
  Integer r = 1, b = base;
  for (; e; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

/// x^e for non-negative integer exponents (0^0 = 1).
inline Rational rational_pow(const Rational& x, unsigned e) {
  Rational r = 1, b = x;
  for (; e; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

inline int sign_of(const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

/// "num" when the denominator is 1, "num/den" otherwise; always lowest terms.
inline std::string to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

/// Parses "num", "+num", "-num" or "num/den" (den > 0). Floats and anything
/// else are rejected with ParseError: exact parameters never pass through a
/// floating-point representation.
inline Rational parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw ParseError("invalid rational literal: '" + text + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail();
  Integer num(text.substr(num_begin, i - num_begin));
  if (negative) num = -num;
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') return fail();
  const std::size_t den_begin = ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size() || i == den_begin) return fail();
  const Integer den(text.substr(den_begin));
  if (den == 0) return fail();
  return Rational(num, den);
}

}  // namespace crinv
