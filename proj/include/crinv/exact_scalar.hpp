#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <string>

#include "crinv/errors.hpp"
#include "crinv/quad_rational.hpp"
#include "crinv/rational.hpp"

namespace crinv {

/// Pi-graded algebraic scalar: a finite sum  sum_e c_e * pi^e  with all
/// coefficients c_e in one field Q(sqrt(d)). Pi stays a formal symbol —
/// nothing is ever evaluated in floating point except through to_decimal —
/// so catalog identities like total = 2^{n+1} (n!)^3 lambda^{n+1} * volume
/// stay bit-exact. Zero coefficients are never stored; d() is 0 whenever no
/// term actually uses the surd. Adding or multiplying scalars over two
/// different non-zero discriminants throws DiscriminantMismatch.
class ExactScalar {
 public:
  ExactScalar() = default;  // zero
  ExactScalar(const Rational& value) { insert(0, value); }  // NOLINT: implicit
  ExactScalar(int value) { insert(0, Rational(value)); }    // NOLINT: implicit
  ExactScalar(const QuadRational& value) { insert(0, value); }  // NOLINT

  /// c * pi^e as a one-term scalar.
  static ExactScalar term(const QuadRational& c, unsigned pi_exponent) {
    ExactScalar x;
    x.insert(pi_exponent, c);
    return x;
  }

  /// pi^e with coefficient 1.
  static ExactScalar pi_power(unsigned e) { return term(QuadRational(1), e); }

  const std::map<unsigned, QuadRational>& terms() const { return terms_; }
  const Integer& d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of pi^e (zero when absent).
  QuadRational coefficient(unsigned pi_exponent) const {
    const auto it = terms_.find(pi_exponent);
    return it == terms_.end() ? QuadRational() : it->second;
  }

  /// True when the value is a plain rational (a single pi^0 rational term).
  bool is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == 0 &&
            terms_.begin()->second.is_rational());
  }

  friend ExactScalar operator-(const ExactScalar& x) {
    ExactScalar r;
    for (const auto& [e, c] : x.terms_) r.insert(e, -c);
    return r;
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r = x;
    for (const auto& [e, c] : y.terms_) r.insert(e, c);
    return r;
  }

  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return x + (-y);
  }

  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) r.insert(ex + ey, cx * cy);
    return r;
  }

  /// Exact division by a pi-free scalar (rationalized in Q(sqrt(d))).
  friend ExactScalar operator/(const ExactScalar& x, const QuadRational& c) {
    ExactScalar r;
    for (const auto& [e, coeff] : x.terms_) r.insert(e, coeff / c);
    return r;
  }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.terms_ == y.terms_;  // d_ is derived from the terms
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) {
    return !(x == y);
  }

  /// Double approximation; test/diagnostic use only.
  double to_double() const {
    double v = 0;
    const double pi = 3.14159265358979323846;
    for (const auto& [e, c] : terms_) v += c.to_double() * std::pow(pi, e);
    return v;
  }

  /// "64*pi^3", "(736/81 + 208/81*sqrt(13))*pi^3", "8", "0", ...
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      const std::string cs = c.str();
      if (e == 0) {
        out += cs;
        continue;
      }
      const std::string pi = e == 1 ? "pi" : "pi^" + std::to_string(e);
      if (c == QuadRational(1)) {
        out += pi;
      } else if (c == QuadRational(-1)) {
        out += "-" + pi;
      } else if (c.is_rational()) {
        out += cs + "*" + pi;
      } else {
        out += "(" + cs + ")*" + pi;
      }
    }
    return out;
  }

 private:
  void insert(unsigned e, const QuadRational& c) {
    if (c.is_zero()) return;
    if (c.d() != 0) {
      if (d_ != 0 && d_ != c.d())
        throw DiscriminantMismatch("cannot combine sqrt(" + d_.str() +
                                   ") with sqrt(" + c.d().str() + ")");
    }
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    refresh_discriminant();
  }

  void refresh_discriminant() {
    d_ = 0;
    for (const auto& [e, c] : terms_)
      if (c.d() != 0) d_ = c.d();
  }

  std::map<unsigned, QuadRational> terms_;
  Integer d_ = 0;
};

namespace detail {

/// floor(pi * 10^scale) + rounding of the last digit, via Machin's formula
/// 16 atan(1/5) - 4 atan(1/239) on scaled integers (8 internal guard digits).
inline Integer pi_scaled(unsigned scale) {
  const Integer unit = int_pow(10, scale + 8);
  const auto atan_inv = [&](unsigned x) {
    const Integer xx = Integer(x) * x;
    Integer power = unit / x;  // unit / x^(2k+1)
    Integer sum = power;
    for (unsigned k = 1; power != 0; ++k) {
      power /= xx;
      if (power == 0) break;
      const Integer term = power / (2 * k + 1);
      if (k & 1u)
        sum -= term;
      else
        sum += term;
    }
    return sum;
  };
  const Integer pi_big = 16 * atan_inv(5) - 4 * atan_inv(239);
  const Integer down = int_pow(10, 8);
  return (pi_big + down / 2) / down;
}

/// floor(sqrt(d) * 10^scale).
inline Integer sqrt_scaled(const Integer& d, unsigned scale) {
  return boost::multiprecision::sqrt(d * int_pow(10, 2 * scale));
}

/// Fixed-point rendering of an exact rational with `digits` fractional
/// digits, rounding half away from zero. "-0" never appears.
inline std::string fixed_decimal(const Rational& value, unsigned digits) {
  const bool negative = value < 0;
  const Rational scaled = abs(value) * Rational(int_pow(10, digits));
  Integer whole = numerator(scaled) / denominator(scaled);
  const Integer remainder = numerator(scaled) % denominator(scaled);
  if (2 * remainder >= denominator(scaled)) ++whole;
  std::string s = whole.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (negative && whole != 0) s.insert(0, "-");
  return s;
}

}  // namespace detail

/// Correctly rounded fixed-point decimal with `digits` fractional digits
/// (round half away from zero). Pure rationals are rounded exactly; values
/// involving pi or a surd are evaluated on scaled integers with 15 guard
/// digits and re-rendered at 35 to confirm the rounding was stable (an
/// irrational value cannot sit exactly on a rounding boundary, so agreement
/// certifies the result). Deterministic by construction.
inline std::string to_decimal(const ExactScalar& x, unsigned digits) {
  if (digits < 1) throw Error("to_decimal requires digits >= 1");
  if (x.is_rational()) return detail::fixed_decimal(x.coefficient(0).a(), digits);

  const auto evaluate = [&](unsigned guard) {
    const unsigned scale = digits + guard;
    const Rational unit = Rational(int_pow(10, scale));
    const Rational pi_apx = Rational(detail::pi_scaled(scale)) / unit;
    const Rational sqrt_apx =
        x.d() == 0 ? Rational(0)
                   : Rational(detail::sqrt_scaled(x.d(), scale)) / unit;
    Rational value = 0;
    for (const auto& [e, c] : x.terms())
      value += (c.a() + c.b() * sqrt_apx) * rational_pow(pi_apx, e);
    return detail::fixed_decimal(value, digits);
  };

  std::string rendered = evaluate(15);
  for (unsigned guard : {35u, 75u, 155u}) {
    const std::string refined = evaluate(guard);
    if (refined == rendered) return rendered;
    rendered = refined;
  }
  return rendered;
}

}  // namespace crinv
