#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <variant>

#include "crinv/errors.hpp"
#include "crinv/exact_scalar.hpp"
#include "crinv/quad_rational.hpp"
#include "crinv/rational.hpp"
#include "crinv/spectral.hpp"

namespace crinv {

/// Round sphere S^{2n+1} with its standard Sasaki-Einstein structure
/// (lambda = 1).
struct Sphere {
  unsigned n;
  friend bool operator==(const Sphere&, const Sphere&) = default;
};

/// The Sasaki-Einstein 5-manifolds Y^{p,q} on S^2 x S^3, indexed by coprime
/// positive integers q < p. (These p, q are the classification indices, not
/// spectral mode labels — same letters, unrelated meaning.)
struct Ypq {
  unsigned p;
  unsigned q;
  friend bool operator==(const Ypq&, const Ypq&) = default;
};

/// S^1-bundle link over a projective Kaehler-Einstein base of complex
/// dimension n, normalized Einstein constant lambda != 0, and embedding
/// degree `degree`. The caller asserts (lambda, degree); no existence
/// checking happens here.
struct ProjectiveLink {
  unsigned n;
  Rational lambda;
  Integer degree;
  friend bool operator==(const ProjectiveLink&, const ProjectiveLink&) = default;
};

/// Link of the Fermat quadric of complex dimension n (degree 2,
/// lambda = n/(n+1)).
struct FermatQuadricLink {
  unsigned n;
  friend bool operator==(const FermatQuadricLink&, const FermatQuadricLink&) = default;
};

/// Link over the Grassmannian G(k, n_amb) in its Pluecker embedding:
/// base dimension m = k(n_amb - k), lambda = n_amb/(m+1), degree from
/// Schubert calculus.
struct GrassmannianLink {
  unsigned k;
  unsigned n_amb;
  friend bool operator==(const GrassmannianLink&, const GrassmannianLink&) = default;
};

/// Tube over a product of hyperbolic Riemann surfaces: Einstein constant -1
/// (lambda = -1/(n+1)), n >= 2, with a prescribed first eigenvalue
/// p_eig in (0, 2) of the base Laplacian. The surface volume is never
/// computed in closed form, so the report uses a formal unit volume; the
/// variant's real role is feeding the second-variation counterexamples.
struct SurfaceProductTube {
  unsigned n;
  Rational p_eig;
  friend bool operator==(const SurfaceProductTube&, const SurfaceProductTube&) = default;
};

using ManifoldSpec = std::variant<Sphere, Ypq, ProjectiveLink,
                                  FermatQuadricLink, GrassmannianLink,
                                  SurfaceProductTube>;

/// Everything the catalog knows about one manifold. Exact identity, enforced
/// by construction and asserted in tests:
///   total_qprime = 2^{n+1} (n!)^3 lambda^{n+1} * volume     (lambda != 0).
struct InvariantReport {
  Geometry geometry;
  ExactScalar total_qprime;
  ExactScalar qprime_density;
  ExactScalar volume;
  std::optional<Integer> degree;

  friend bool operator==(const InvariantReport& x, const InvariantReport& y) {
    return x.geometry == y.geometry && x.total_qprime == y.total_qprime &&
           x.qprime_density == y.qprime_density && x.volume == y.volume &&
           x.degree == y.degree;
  }
};

/// Q'-curvature density of a Sasakian eta-Einstein structure:
/// Q' = 2 (n!)^2 lambda^{n+1}, a constant function.
inline ExactScalar qprime_density(const Geometry& g) {
  const Rational nf(factorial(g.n));
  return ExactScalar(2 * nf * nf * rational_pow(g.lambda, g.n + 1));
}

/// Degree of G(k, n_amb) under the Pluecker embedding:
/// (k(n_amb-k))! * prod_{i=1}^{k} (i-1)! / (n_amb-k+i-1)!.
/// The rational product always clears to an integer.
inline Integer grassmannian_degree(unsigned k, unsigned n_amb) {
  if (k < 1 || k >= n_amb)
    throw SpecViolation("grassmannian_degree needs 1 <= k < n_amb");
  Rational r(factorial(k * (n_amb - k)));
  for (unsigned i = 1; i <= k; ++i)
    r *= Rational(factorial(i - 1), factorial(n_amb - k + i - 1));
  if (denominator(r) != 1)
    throw Error("Grassmannian degree did not clear to an integer");
  return numerator(r);
}

/// volume = total / (2^{n+1} (n!)^3 lambda^{n+1}); exact.
inline ExactScalar volume_from_total(const Geometry& g,
                                     const ExactScalar& total) {
  if (g.lambda == 0)
    throw ZeroEinsteinConstant("volume back-out needs lambda != 0");
  const Rational nf(factorial(g.n));
  const Rational factor = Rational(int_pow(2, g.n + 1)) * nf * nf * nf *
                          rational_pow(g.lambda, g.n + 1);
  return total / QuadRational(factor);
}

namespace detail {

inline InvariantReport make_report(const Geometry& g, ExactScalar total,
                                   std::optional<Integer> degree) {
  ExactScalar volume = volume_from_total(g, total);
  return InvariantReport{g, std::move(total), qprime_density(g),
                         std::move(volume), std::move(degree)};
}

/// The generic projective-link total:
/// 2^{n+2} (n!)^2 lambda^{n+1} deg * pi^{n+1}.
inline ExactScalar projective_link_total(unsigned n, const Rational& lambda,
                                         const Integer& degree) {
  const Rational nf(factorial(n));
  const Rational coeff = Rational(int_pow(2, n + 2)) * nf * nf *
                         rational_pow(lambda, n + 1) * Rational(degree);
  return ExactScalar::term(QuadRational(coeff), n + 1);
}

}  // namespace detail

/// Total Q'-curvature (and companions) for every catalog variant. Each
/// variant evaluates its own displayed closed form; the cross-variant
/// consistency statements (Fermat = degree-2 projective link, Grassmannian =
/// Pluecker-degree link, sphere = degree-1 link at lambda = 1) are theorems
/// asserted in the test suite, not implementation shortcuts.
inline InvariantReport total_qprime(const ManifoldSpec& spec) {
  using detail::make_report;

  if (const auto* s = std::get_if<Sphere>(&spec)) {
    const Geometry g(s->n, 1);
    const Rational nf(factorial(s->n));
    // 2^{n+2} (n!)^2 pi^{n+1}
    const Rational coeff = Rational(int_pow(2, s->n + 2)) * nf * nf;
    return make_report(g, ExactScalar::term(QuadRational(coeff), s->n + 1),
                       std::nullopt);
  }

  if (const auto* y = std::get_if<Ypq>(&spec)) {
    if (y->p == 0 || y->q == 0 || y->q >= y->p)
      throw SpecViolation("Y^{p,q} needs positive integers q < p");
    if (std::gcd(y->p, y->q) != 1)
      throw SpecViolation("Y^{p,q} indices p, q must be coprime");
    const Geometry g(2, 1);
    const Integer p(y->p), q(y->q);
    // 2^6 q^2 (2p + s) / (3 p^2 (3q^2 - 2p^2 + p s)),  s = sqrt(4p^2 - 3q^2),
    // rationalized into Q(sqrt(4p^2 - 3q^2)); perfect squares collapse.
    const QuadRational s(0, 1, 4 * p * p - 3 * q * q);
    const QuadRational num = QuadRational(Rational(64 * q * q)) *
                             (QuadRational(Rational(2 * p)) + s);
    const QuadRational den =
        QuadRational(Rational(3 * p * p)) *
        (QuadRational(Rational(3 * q * q - 2 * p * p)) +
         QuadRational(Rational(p)) * s);
    return make_report(g, ExactScalar::term(num / den, 3), std::nullopt);
  }

  if (const auto* l = std::get_if<ProjectiveLink>(&spec)) {
    if (l->degree < 1) throw SpecViolation("projective link degree must be >= 1");
    if (l->lambda == 0)
      throw ZeroEinsteinConstant("projective link needs lambda != 0");
    const Geometry g(l->n, l->lambda);
    return make_report(
        g, detail::projective_link_total(l->n, l->lambda, l->degree),
        l->degree);
  }

  if (const auto* f = std::get_if<FermatQuadricLink>(&spec)) {
    const unsigned n = f->n;
    const Geometry g(n, Rational(Integer(n), Integer(n) + 1));
    const Rational nf(factorial(n));
    // 2^{n+3} (n!)^2 n^{n+1} (n+1)^{-(n+1)} pi^{n+1}
    const Rational coeff = Rational(int_pow(2, n + 3)) * nf * nf *
                           Rational(int_pow(Integer(n), n + 1),
                                    int_pow(Integer(n) + 1, n + 1));
    return make_report(g, ExactScalar::term(QuadRational(coeff), n + 1),
                       Integer(2));
  }

  if (const auto* gr = std::get_if<GrassmannianLink>(&spec)) {
    const Integer degree = grassmannian_degree(gr->k, gr->n_amb);
    const unsigned m = gr->k * (gr->n_amb - gr->k);
    const Rational lambda(Integer(gr->n_amb), Integer(m) + 1);
    const Geometry g(m, lambda);
    const Rational mf(factorial(m));
    // 2^{m+2} (m!)^2 deg * (n_amb pi / (m+1))^{m+1}
    const Rational coeff = Rational(int_pow(2, m + 2)) * mf * mf *
                           Rational(degree) * rational_pow(lambda, m + 1);
    return make_report(g, ExactScalar::term(QuadRational(coeff), m + 1),
                       degree);
  }

  const auto& t = std::get<SurfaceProductTube>(spec);
  if (t.n < 2)
    throw SpecViolation("surface-product tube needs n >= 2");
  if (!(t.p_eig > 0 && t.p_eig < 2))
    throw SpecViolation("surface-product tube needs 0 < p_eig < 2");
  const Geometry g(t.n, Rational(Integer(-1), Integer(t.n) + 1));
  // Volume of the surface product is a formal unit, so the total is just
  // 2^{n+1} (n!)^3 lambda^{n+1}; make_report then backs volume out as
  // exactly 1, keeping the report identity intact.
  const Rational nf(factorial(t.n));
  const Rational coeff = Rational(int_pow(2, t.n + 1)) * nf * nf * nf *
                         rational_pow(g.lambda, t.n + 1);
  return make_report(g, ExactScalar(coeff), std::nullopt);
}

/// psi_lambda(x) = (exp(lambda x) - 1) / lambda, continued by x at
/// lambda = 0. Solves psi' = 1 + lambda psi, psi(0) = 0. The one deliberate
/// floating-point operation in the library — exp is transcendental, and the
/// exact-scalar layer refuses approximations by design.
inline double psi_lambda(const Rational& lambda, double x) {
  if (lambda == 0) return x;
  const double l = lambda.convert_to<double>();
  return std::expm1(l * x) / l;
}

}  // namespace crinv
