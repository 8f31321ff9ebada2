#pragma once

#include <string>

#include "crinv/errors.hpp"
#include "crinv/rational.hpp"

namespace crinv {

/// The pair (n, lambda): CR dimension parameter (the manifold is 2n+1
/// dimensional) and normalized Einstein constant — the Tanaka-Webster Ricci
/// curvature is (n+1) lambda times the Levi form.
struct Geometry {
  unsigned n;
  Rational lambda;

  Geometry(unsigned n_, Rational lambda_) : n(n_), lambda(std::move(lambda_)) {
    if (n < 1) throw InvalidDimension("CR dimension parameter n must be >= 1");
  }

  friend bool operator==(const Geometry& x, const Geometry& y) {
    return x.n == y.n && x.lambda == y.lambda;
  }
};

/// Joint eigenvalue pair of (Delta_b, sqrt(-1) xi): Delta_b f = p f and
/// sqrt(-1) xi f = q f. p >= 0 always (the sub-Laplacian spectrum lives in
/// [0, inf)); realizability (p >= n|q|) is deliberately NOT a construction
/// invariant — scans must classify free (p, q) first and filter after — see
/// is_admissible.
struct Mode {
  Rational p;
  Rational q;

  Mode(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p < 0) throw SpecViolation("sub-Laplacian eigenvalue p must be >= 0");
  }

  friend bool operator==(const Mode& x, const Mode& y) {
    return x.p == y.p && x.q == y.q;
  }
};

/// Density bi-weight (w, w'). The derived operator order k = w + w' + n + 1
/// must come out a positive integer; gjms_eigenvalue checks that against the
/// geometry at the call site.
struct Weight {
  Rational w;
  Rational w_prime;

  friend bool operator==(const Weight& x, const Weight& y) {
    return x.w == y.w && x.w_prime == y.w_prime;
  }
};

/// Eigenvalue of L_mu = 1/2 Delta_b + (sqrt(-1)/2) mu xi
///                    + 1/4 lambda (n - mu)(n + mu)
/// on the mode (p, q):  1/2 p + 1/2 mu q + 1/4 lambda (n - mu)(n + mu).
inline Rational l_mu_eigenvalue(const Geometry& g, const Rational& mu,
                                const Mode& m) {
  const Rational n(g.n);
  return m.p / 2 + mu * m.q / 2 + g.lambda * (n - mu) * (n + mu) / 4;
}

/// Eigenvalue of the GJMS-type operator P_{w,w'} = prod_{j=0}^{k-1} L_mu_j
/// with mu_j = w' - w + k - 2j - 1 and k = w + w' + n + 1.
///
/// The CR-invariance regime of such operators is k <= n + 1, but that bound
/// is intentionally not enforced: weight (1,1) has k = n + 3 and is exactly
/// the second-variation operator P_{1,1}, which remains meaningful on
/// eta-Einstein structures.
inline Rational gjms_eigenvalue(const Geometry& g, const Weight& wt,
                                const Mode& m) {
  const Rational order = wt.w + wt.w_prime + Rational(g.n) + 1;
  if (denominator(order) != 1 || order < 1)
    throw InvalidOrder("operator order k = w + w' + n + 1 must be a positive"
                       " integer, got k = " + to_string(order));
  const Integer k = numerator(order);
  Rational product = 1;
  for (Integer j = 0; j < k; ++j) {
    const Rational mu = wt.w_prime - wt.w + order - 2 * Rational(j) - 1;
    product *= l_mu_eigenvalue(g, mu, m);
  }
  return product;
}

/// True iff p >= n|q|, the necessary condition for the joint eigenspace
/// H_{p,q} to be non-zero on a closed manifold.
inline bool is_admissible(const Geometry& g, const Mode& m) {
  return m.p >= Rational(g.n) * abs(m.q);
}

/// P'-operator eigenvalue on a pluriharmonic mode:
/// (1/n) (p^2 + n^2 lambda p) * gjms at weight (-1,-1) (order k = n - 1;
/// the empty product at n = 1 is 1, so P' still evaluates on 3-dimensional
/// Sasakian manifolds). Requires the pluriharmonic boundary p = n|q|.
inline Rational pprime_eigenvalue(const Geometry& g, const Mode& m) {
  const Rational n(g.n);
  if (m.p != n * abs(m.q))
    throw NotPluriharmonic("P' eigenvalue needs a pluriharmonic mode with"
                           " p = n|q|; got p = " + to_string(m.p) +
                           ", n|q| = " + to_string(n * abs(m.q)));
  const Rational tail =
      g.n == 1 ? Rational(1)
               : gjms_eigenvalue(g, Weight{Rational(-1), Rational(-1)}, m);
  return (m.p * m.p + n * n * g.lambda * m.p) * tail / n;
}

/// The (5.1) quantity: (1/2 p + 1/2 n q)(1/2 p + 1/2 (n+2) q - (n+1) lambda),
/// i.e. the eigenvalue of L_{n+2} L_n. Non-negative on realizable modes and
/// zero exactly on ker D_eta. Keep the factors paired exactly like this:
/// individually they can go negative on realizable modes.
inline Rational kernel_d_product(const Geometry& g, const Mode& m) {
  const Rational n(g.n);
  return (m.p / 2 + n * m.q / 2) *
         (m.p / 2 + (n + 2) * m.q / 2 - (n + 1) * g.lambda);
}

/// The (5.2) quantity, eigenvalue of L_{-n-2} L_{-n}; zero on ker Dbar_eta.
inline Rational kernel_dbar_product(const Geometry& g, const Mode& m) {
  const Rational n(g.n);
  return (m.p / 2 - n * m.q / 2) *
         (m.p / 2 - (n + 2) * m.q / 2 - (n + 1) * g.lambda);
}

/// True iff the mode sits in ker D_eta (infinitesimal CR deformation kernel).
inline bool in_kernel_d(const Geometry& g, const Mode& m) {
  return kernel_d_product(g, m) == 0;
}

/// True iff the mode sits in ker Dbar_eta.
inline bool in_kernel_dbar(const Geometry& g, const Mode& m) {
  return kernel_dbar_product(g, m) == 0;
}

/// True iff both edge products (5.1) and (5.2) are >= 0. Together with
/// is_admissible this is the "realizable mode" filter used by scans.
inline bool edge_inequalities_hold(const Geometry& g, const Mode& m) {
  return kernel_d_product(g, m) >= 0 && kernel_dbar_product(g, m) >= 0;
}

}  // namespace crinv
