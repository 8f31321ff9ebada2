#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "crinv/errors.hpp"
#include "crinv/rational.hpp"

namespace crinv {

/// Splits m = s^2 * f with f square-free; returns (s, f). Trial division —
/// fine for the catalog's discriminants (4p^2 - 3q^2 scale).
inline std::pair<Integer, Integer> extract_square(Integer m) {
  Integer s = 1;
  for (Integer f = 2; f * f <= m; ++f) {
    const Integer ff = f * f;
    while (m % ff == 0) {
      m /= ff;
      s *= f;
    }
  }
  return {s, m};
}

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is kept non-negative and square-free; perfect-square inputs collapse to
/// the rationals at construction (b*sqrt(121) folds into a as 11b, d becomes
/// 0), so d = 0 <=> the value is rational <=> b = 0. Equality is componentwise
/// on the normalized representation. Mixing two distinct non-zero
/// discriminants throws DiscriminantMismatch: the invariant catalog never
/// needs a composite field tower, so we refuse loudly instead of widening.
class QuadRational {
 public:
  QuadRational() = default;
  QuadRational(const Rational& a) : a_(a) {}  // NOLINT: implicit by design
  QuadRational(int a) : a_(a) {}              // NOLINT: implicit by design

  QuadRational(const Rational& a, const Rational& b, const Integer& d)
      : a_(a), b_(b), d_(d) {
    normalize();
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// The value as a plain rational; throws unless is_rational().
  const Rational& rational() const {
    if (!is_rational()) throw Error("value has a non-trivial surd part");
    return a_;
  }

  friend QuadRational operator-(const QuadRational& x) {
    return QuadRational(-x.a_, -x.b_, x.d_);
  }

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
    return QuadRational(x.a_ + y.a_, x.b_ + y.b_, joint_discriminant(x, y));
  }

  friend QuadRational operator-(const QuadRational& x, const QuadRational& y) {
    return x + (-y);
  }

  friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
    const Integer d = joint_discriminant(x, y);
    return QuadRational(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                        x.a_ * y.b_ + x.b_ * y.a_, d);
  }

  /// Exact division with rationalized denominator:
  /// (a + b sqrt d) / (c + e sqrt d) = (a + b sqrt d)(c - e sqrt d) / (c^2 - e^2 d).
  friend QuadRational operator/(const QuadRational& x, const QuadRational& y) {
    const Integer d = joint_discriminant(x, y);
    if (y.is_zero()) throw Error("division by zero");
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    // norm = 0 would mean sqrt(d) rational, impossible once d is square-free.
    const QuadRational conj(y.a_, -y.b_, d);
    QuadRational num = x * conj;
    return QuadRational(num.a_ / norm, num.b_ / norm, d);
  }

  friend bool operator==(const QuadRational& x, const QuadRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadRational& x, const QuadRational& y) {
    return !(x == y);
  }

  /// Double approximation; test/diagnostic use only.
  double to_double() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
    return v;
  }

  /// "23/162 + 13/324*sqrt(13)", "-sqrt(5)", "3/2", ... (no outer parens).
  std::string str() const {
    if (b_ == 0) return to_string(a_);
    std::string surd;
    if (b_ == 1) {
      surd = "sqrt(" + d_.str() + ")";
    } else if (b_ == -1) {
      surd = "-sqrt(" + d_.str() + ")";
    } else {
      surd = to_string(b_) + "*sqrt(" + d_.str() + ")";
    }
    if (a_ == 0) return surd;
    if (b_ > 0) return to_string(a_) + " + " + surd;
    return to_string(a_) + " - " + (b_ == -1 ? "sqrt(" + d_.str() + ")"
                                             : to_string(-b_) + "*sqrt(" + d_.str() + ")");
  }

 private:
  static Integer joint_discriminant(const QuadRational& x, const QuadRational& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw DiscriminantMismatch("cannot combine sqrt(" + x.d_.str() +
                               ") with sqrt(" + y.d_.str() + ")");
  }

  void normalize() {
    if (d_ < 0) throw SpecViolation("discriminant must be non-negative");
    if (d_ == 0) {
      b_ = 0;  // b*sqrt(0) contributes nothing
      return;
    }
    if (b_ == 0) {
      d_ = 0;
      return;
    }
    auto [s, f] = extract_square(d_);
    b_ *= Rational(s);
    d_ = f;
    if (d_ == 1) {  // original d was a perfect square
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }

  Rational a_ = 0;
  Rational b_ = 0;
  Integer d_ = 0;
};

}  // namespace crinv
