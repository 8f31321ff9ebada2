#pragma once

#include <string>
#include <vector>

#include "crinv/errors.hpp"
#include "crinv/exact_scalar.hpp"
#include "crinv/rational.hpp"
#include "crinv/spectral.hpp"

namespace crinv {

/// Sign of the second variation of the total Q'-curvature along an
/// eigenmode deformation. The variation is c'_n * p11 with c'_n < 0, so
/// p11 > 0 means Negative, p11 < 0 means Positive.
enum class SvSign { Negative, Zero, Positive };

inline const char* to_string(SvSign s) {
  switch (s) {
    case SvSign::Negative: return "Negative";
    case SvSign::Zero: return "Zero";
    case SvSign::Positive: return "Positive";
  }
  return "?";
}

/// Full second-variation record of one mode. Exact invariants:
/// p11 = edge_product * middle_product (middle_product = 1 when n = 1), and
/// sv_sign = sign of c'_n * p11.
struct ModeClassification {
  Mode mode;
  Rational p11;
  Rational edge_product;
  Rational middle_product;
  bool in_ker_d = false;
  bool in_ker_dbar = false;
  SvSign sv_sign = SvSign::Zero;

  friend bool operator==(const ModeClassification& x,
                         const ModeClassification& y) {
    return x.mode == y.mode && x.p11 == y.p11 &&
           x.edge_product == y.edge_product &&
           x.middle_product == y.middle_product &&
           x.in_ker_d == y.in_ker_d && x.in_ker_dbar == y.in_ker_dbar &&
           x.sv_sign == y.sv_sign;
  }
};

/// The j-th factor of the P_{1,1} product:
/// 1/2 p + 1/2 (n + 2 - 2j) q + lambda (j - 1)(n + 1 - j),   j = 0..n+2.
inline Rational p11_factor(const Geometry& g, const Mode& m, unsigned j) {
  const Rational n(g.n);
  const Rational jj(j);
  return m.p / 2 + (n + 2 - 2 * jj) * m.q / 2 +
         g.lambda * (jj - 1) * (n + 1 - jj);
}

/// Eigenvalue of P_{1,1}: the (n+3)-factor product of p11_factor. This is an
/// independent code path from gjms_eigenvalue at weight (1,1); the two are
/// asserted equal in the test suite.
inline Rational p11_eigenvalue(const Geometry& g, const Mode& m) {
  Rational product = 1;
  for (unsigned j = 0; j <= g.n + 2; ++j) product *= p11_factor(g, m, j);
  return product;
}

/// Normalization constant of the first variation: c_n = 2 n! (n+2)!.
inline Integer c_n(unsigned n) { return 2 * factorial(n) * factorial(n + 2); }

/// Normalization constant of the second variation:
/// c'_n = -2 / ((n+1)(n+2)) < 0.
inline Rational c_prime_n(unsigned n) {
  return Rational(Integer(-2), Integer(n + 1) * (n + 2));
}

/// Splits the P_{1,1} product into the edge part (j in {0, 1, n+1, n+2},
/// which equals the product of the (5.1) and (5.2) quantities) and the
/// middle part (j = 2..n, empty product 1 when n = 1), and derives the
/// second-variation sign from p11 = edge * middle.
inline ModeClassification classify_mode(const Geometry& g, const Mode& m) {
  Rational edge = 1;
  for (unsigned j : {0u, 1u, g.n + 1, g.n + 2}) edge *= p11_factor(g, m, j);
  Rational middle = 1;
  for (unsigned j = 2; j <= g.n; ++j) middle *= p11_factor(g, m, j);
  const Rational p11 = edge * middle;
  const int s = sign_of(p11);
  return ModeClassification{
      m,
      p11,
      edge,
      middle,
      in_kernel_d(g, m),
      in_kernel_dbar(g, m),
      s > 0 ? SvSign::Negative : (s < 0 ? SvSign::Positive : SvSign::Zero)};
}

/// Classifies every mode with denominators dividing denom_bound in the box
/// 0 <= p <= p_max, |q| <= q_max that passes is_admissible AND
/// edge_inequalities_hold (the realizability filter — scanning raw (p, q)
/// would fabricate sign violations on modes no closed manifold carries).
/// Output is ordered lexicographically by (p, q). Sequential on purpose:
/// the grids in scope classify in milliseconds and determinism is part of
/// the contract.
inline std::vector<ModeClassification> scan_modes(const Geometry& g,
                                                  const Rational& p_max,
                                                  const Rational& q_max,
                                                  unsigned denom_bound) {
  if (p_max < 0 || q_max < 0)
    throw SpecViolation("scan bounds p_max, q_max must be non-negative");
  if (denom_bound < 1) throw SpecViolation("denom_bound must be >= 1");
  const Rational p_scaled = p_max * Rational(denom_bound);
  const Rational q_scaled = q_max * Rational(denom_bound);
  const Integer i_max = numerator(p_scaled) / denominator(p_scaled);
  const Integer j_max = numerator(q_scaled) / denominator(q_scaled);
  const Integer denom(denom_bound);
  std::vector<ModeClassification> out;
  for (Integer i = 0; i <= i_max; ++i) {
    for (Integer j = -j_max; j <= j_max; ++j) {
      const Mode m(Rational(i, denom), Rational(j, denom));
      if (!is_admissible(g, m) || !edge_inequalities_hold(g, m)) continue;
      out.push_back(classify_mode(g, m));
    }
  }
  return out;
}

/// A Thm-1.6-style example: the geometry, the distinguished mode, and its
/// classification.
struct Counterexample {
  Geometry geometry;
  Mode mode;
  ModeClassification classification;
};

/// The tube over a product of hyperbolic Riemann surfaces (Einstein constant
/// -1, so lambda = -1/(n+1)) carrying a first eigenvalue p = 2(n-1)/(n+1):
/// a non-trivial infinitesimal deformation with vanishing second variation.
/// The classification comes out p11 = 0 with both kernel flags false.
inline Counterexample counterexample_vanishing(unsigned n) {
  if (n < 2)
    throw InvalidDimension("the vanishing counterexample needs n >= 2");
  const Geometry g(n, Rational(Integer(-1), Integer(n) + 1));
  const Mode m(Rational(2 * (Integer(n) - 1), Integer(n) + 1), Rational(0));
  return Counterexample{g, m, classify_mode(g, m)};
}

/// For even n = 2m and lambda = -1/(n+1): the largest mode p = 1/D (q = 0,
/// D the smallest positive integer) with p11 < 0, i.e. positive second
/// variation. Canonical representative — the underlying statement is only
/// that sufficiently small p > 0 works, but tests need determinism.
inline Counterexample counterexample_positive(unsigned n) {
  if (n < 2 || n % 2 != 0)
    throw InvalidDimension("the positive counterexample needs even n >= 2");
  const Geometry g(n, Rational(Integer(-1), Integer(n) + 1));
  // p11(p) < 0 holds for all 0 < p < 2m^2/(2m+1), so D never exceeds 2;
  // the loop bound is pure paranoia.
  for (unsigned D = 1; D <= 64; ++D) {
    const Mode m(Rational(Integer(1), Integer(D)), Rational(0));
    if (p11_eigenvalue(g, m) < 0)
      return Counterexample{g, m, classify_mode(g, m)};
  }
  throw Error("no mode 1/D with negative P_{1,1} eigenvalue found");
}

/// First variation of the total Q'-curvature: identically zero on Sasakian
/// eta-Einstein manifolds — the variation is c_n * integral(phi * O) and the
/// ambient obstruction function O vanishes. Returned as an exact scalar so
/// the vanishing participates in the same arithmetic as everything else;
/// the constant c_n is exposed separately above.
inline ExactScalar first_variation(const Geometry& g) {
  (void)g;
  return ExactScalar();
}

}  // namespace crinv
