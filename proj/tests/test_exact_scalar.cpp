#include <catch_amalgamated.hpp>

#include <random>

#include "crinv/exact_scalar.hpp"
#include "crinv/quad_rational.hpp"
#include "crinv/rational.hpp"

using namespace crinv;

namespace {

Rational random_rational(std::mt19937& rng, int num_lo, int num_hi,
                         int den_hi) {
  std::uniform_int_distribution<int> num(num_lo, num_hi);
  std::uniform_int_distribution<int> den(1, den_hi);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(to_string(Rational(-2, 3)) == "-2/3");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(to_string(parse_rational("736/81")) == "736/81");

  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("2/3/4"), ParseError);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(4) == 24);
  // iterated-multiplication oracle value
  CHECK(factorial(12) == Integer("479001600"));
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("quadratic surd normalization") {
  // perfect squares collapse to the rationals at construction
  CHECK(QuadRational(0, 1, 4) == QuadRational(2));
  CHECK(QuadRational(Rational(1, 2), Rational(3), 121) ==
        QuadRational(Rational(67, 2)));
  // square parts are pulled out: sqrt(12) = 2 sqrt(3)
  const QuadRational r(0, 1, 12);
  CHECK(r.d() == 3);
  CHECK(r.b() == 2);
  // d = 0 and d = 1 are rational no matter what b says
  CHECK(QuadRational(Rational(5), Rational(7), 0).is_rational());
  CHECK(QuadRational(Rational(5), Rational(7), 1) == QuadRational(12));
  CHECK_THROWS_AS(QuadRational(0, 1, -5), SpecViolation);
}

TEST_CASE("quadratic surd arithmetic") {
  const QuadRational x(4, 1, 13);   // 4 + sqrt(13)
  const QuadRational y(5, 2, 13);   // 5 + 2 sqrt(13)
  // hand expansion: 20 + 8 sqrt13 + 5 sqrt13 + 2*13 = 46 + 13 sqrt13
  CHECK(x * y == QuadRational(46, 13, 13));

  // division rationalizes the denominator exactly
  CHECK((x * y) / y == x);
  CHECK(QuadRational(1) / QuadRational(0, 1, 2) ==
        QuadRational(0, Rational(1, 2), 2));

  // mixing discriminants is rejected loudly
  CHECK_THROWS_AS(QuadRational(1, 1, 13) + QuadRational(1, 1, 5),
                  DiscriminantMismatch);
  CHECK_THROWS_AS(QuadRational(1, 1, 13) * QuadRational(0, 2, 7),
                  DiscriminantMismatch);
  // ... but rationals embed into any Q(sqrt(d))
  CHECK(QuadRational(3) + QuadRational(1, 1, 13) == QuadRational(4, 1, 13));
  CHECK_THROWS_AS(QuadRational(1, 1, 13) / QuadRational(), Error);
}

TEST_CASE("quadratic surd arithmetic tracks floating point") {
  std::mt19937 rng(20260814);
  for (int i = 0; i < 500; ++i) {
    const QuadRational x(random_rational(rng, -50, 50, 9),
                         random_rational(rng, -50, 50, 9), 13);
    const QuadRational y(random_rational(rng, -50, 50, 9),
                         random_rational(rng, -50, 50, 9), 13);
    const double prod = (x * y).to_double();
    const double ref = x.to_double() * y.to_double();
    CHECK_THAT(prod, Catch::Matchers::WithinRel(ref, 1e-12));
  }
}

TEST_CASE("rational arithmetic laws on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_rational(rng, -30, 30, 12);
    const Rational b = random_rational(rng, -30, 30, 12);
    const Rational c = random_rational(rng, -30, 30, 12);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("pi-graded scalars") {
  const ExactScalar half_pi2 = ExactScalar::term(QuadRational(Rational(1, 2)), 2);
  CHECK(half_pi2 + half_pi2 == ExactScalar::pi_power(2));

  // cancellation down to a pure surd coefficient
  const ExactScalar s1 = ExactScalar::term(QuadRational(3, 1, 13), 3);
  const ExactScalar s2 = ExactScalar::term(QuadRational(-3), 3);
  CHECK(s1 + s2 == ExactScalar::term(QuadRational(0, 1, 13), 3));

  // full cancellation leaves the canonical zero (no stored terms, d = 0)
  const ExactScalar z = s1 - s1;
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK(z.d() == 0);

  // exponents add, coefficients multiply in Q(sqrt(d))
  CHECK(ExactScalar::pi_power(1) * ExactScalar::pi_power(2) ==
        ExactScalar::pi_power(3));
  CHECK(ExactScalar(0) * ExactScalar::term(QuadRational(7, 1, 13), 5) ==
        ExactScalar());

  CHECK_THROWS_AS(ExactScalar::term(QuadRational(1, 1, 13), 3) +
                      ExactScalar::term(QuadRational(1, 1, 5), 3),
                  DiscriminantMismatch);
  CHECK_THROWS_AS(ExactScalar::term(QuadRational(1, 1, 13), 1) *
                      ExactScalar::term(QuadRational(1, 1, 5), 1),
                  DiscriminantMismatch);

  // division by a pi-free scalar
  const ExactScalar total = ExactScalar::term(QuadRational(64), 3);
  CHECK(total / QuadRational(32) == ExactScalar::term(QuadRational(2), 3));
}

TEST_CASE("scalar normalization is idempotent") {
  // rebuilding a normalized value from its own components is the identity
  const ExactScalar x =
      ExactScalar::term(QuadRational(Rational(3, 4), Rational(-2, 9), 13), 2) +
      ExactScalar(Rational(5, 6));
  ExactScalar rebuilt;
  for (const auto& [e, c] : x.terms())
    rebuilt = rebuilt + ExactScalar::term(QuadRational(c.a(), c.b(), c.d()), e);
  CHECK(rebuilt == x);
}

TEST_CASE("scalar pretty printing") {
  CHECK(ExactScalar().str() == "0");
  CHECK(ExactScalar(8).str() == "8");
  CHECK(ExactScalar::term(QuadRational(64), 3).str() == "64*pi^3");
  CHECK(ExactScalar::pi_power(1).str() == "pi");
  CHECK(ExactScalar::term(QuadRational(-1), 2).str() == "-pi^2");
  CHECK(ExactScalar::term(QuadRational(Rational(736, 81), Rational(208, 81), 13), 3)
            .str() == "(736/81 + 208/81*sqrt(13))*pi^3");
  CHECK(QuadRational(0, Rational(-1, 3), 5).str() == "-1/3*sqrt(5)");
  CHECK(QuadRational(2, -1, 5).str() == "2 - sqrt(5)");
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(ExactScalar::pi_power(1), 6) == "3.141593");
  CHECK(to_decimal(ExactScalar(), 3) == "0.000");
  CHECK(to_decimal(ExactScalar(64), 3) == "64.000");

  // exact rational rounding, half away from zero
  CHECK(to_decimal(ExactScalar(Rational(1, 8)), 2) == "0.13");
  CHECK(to_decimal(ExactScalar(Rational(-1, 8)), 2) == "-0.13");
  CHECK(to_decimal(ExactScalar(Rational(1, 4)), 1) == "0.3");
  CHECK(to_decimal(ExactScalar(Rational(-1, 5000)), 3) == "0.000");

  // 30 digits of pi, checked against the published expansion
  CHECK(to_decimal(ExactScalar::pi_power(1), 30) ==
        "3.141592653589793238462643383280");

  // sqrt(13) through the surd path
  CHECK(to_decimal(ExactScalar(QuadRational(0, 1, 13)), 12) ==
        "3.605551275464");

  // the Y^{2,1} total: ((736 + 208 sqrt13)/81) pi^3 ~ 18.3451 pi^3
  const ExactScalar ypq = ExactScalar::term(
      QuadRational(Rational(736, 81), Rational(208, 81), 13), 3);
  const std::string four = to_decimal(ypq, 4);
  CHECK(four.substr(0, 5) == "568.8");

  // digits and digits+3 agree: re-rounding the longer rendering to the
  // shorter width reproduces it exactly (raw prefix equality would be wrong
  // whenever the shorter rendering rounds up — pi^3 at 6 digits does)
  for (const ExactScalar& x :
       {ypq, ExactScalar::pi_power(3), ExactScalar(QuadRational(0, 1, 13))}) {
    const std::string d6 = to_decimal(x, 6);
    const std::string d9 = to_decimal(x, 9);
    const auto dot = d9.find('.');
    const Rational reparsed(Integer(d9.substr(0, dot) + d9.substr(dot + 1)),
                            int_pow(10, 9));
    CHECK(detail::fixed_decimal(reparsed, 6) == d6);
  }

  CHECK_THROWS_AS(to_decimal(ExactScalar(1), 0), Error);
}
