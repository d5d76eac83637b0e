#include "hurwitz/degenerate.hpp"

#include <doctest.h>

#include "hurwitz/chebyshev.hpp"
#include "hurwitz/error.hpp"

using namespace hurwitz;

using Poly = Polynomial<Rational>;

namespace {
Poly poly(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return Poly(std::move(v));
}
}  // namespace

TEST_CASE("monic square root") {
  Poly p = poly({1, 2, 1});
  CHECK(monic_sqrt(p) == poly({1, 1}));
  Poly r{std::vector<Rational>{Rational(1, 3), Rational(-2), Rational(1)}};
  CHECK(monic_sqrt(r * r) == r);
  CHECK(monic_sqrt(Poly(1)) == Poly(1));
  CHECK_THROWS_AS(monic_sqrt(poly({1, 1, 1})), nonzero_remainder);
  CHECK_THROWS_AS(monic_sqrt(poly({0, 1})), nonzero_remainder);
  CHECK_THROWS_AS(monic_sqrt(poly({1, 0, 2})), nonzero_remainder);
}

TEST_CASE("degree six starting member") {
  RationalFunction x = pade_degenerate(6);
  // X^6 / (15 X^2 - 24 X + 10), stored with monic denominator
  Poly q = poly({10, -24, 15});
  CHECK(x == RationalFunction(Poly::monomial(6), q));
  CHECK(x.map_degree() == 6);

  CoverModel<Rational> m = initial_coefficients(6);
  CHECK(m.gamma == Rational(15));
  CHECK(m.beta1 == Rational(-8, 5));
  CHECK(m.beta0 == Rational(2, 3));
  CHECK(m.delta == std::vector<Rational>{Rational(10), Rational(6), Rational(3)});
  CHECK(m.factor_b() == poly({10, 6, 3, 1}));
}

TEST_CASE("contact of order three at X=1") {
  for (int n = 6; n <= 20; n += 2) {
    CAPTURE(n);
    RationalFunction x = pade_degenerate(n);
    // recover Q on its natural scale: denominator is monic, so rescale by
    // the leading coefficient of the numerator
    Rational gamma = Rational(static_cast<long>(n) * (n - 1), 2);
    Poly q = gamma * x.denominator();
    CHECK(x.numerator() == Rational(1) / gamma * Poly::monomial(n));
    CHECK(q.eval(Rational(1)) == Rational(1));
    CHECK(q.derivative().eval(Rational(1)) == Rational(n));
    CHECK(q.derivative().derivative().eval(Rational(1)) ==
          Rational(static_cast<long>(n) * (n - 1)));
    // numerator - denominator has a triple root at 1, no more
    Poly diff = Poly::monomial(n) - q;
    Poly shift = poly({-1, 1});
    Poly cof = exact_div(diff, shift * shift * shift);
    CHECK(cof.degree() == n - 3);
    CHECK(!cof.eval(Rational(1)).is_zero());
    CHECK(gcd(cof, cof.derivative()).degree() == 0);

    CoverModel<Rational> m = initial_coefficients(n);
    CHECK(m.residual_at_one().is_zero());
    CHECK(m.residual_at_lambda().is_zero());
    CHECK(static_cast<int>(m.delta.size()) == n - 3);
  }
  CHECK_THROWS_AS(pade_degenerate(7), invalid_parameter);
  CHECK_THROWS_AS(pade_degenerate(4), invalid_parameter);
  CHECK_THROWS_AS(initial_coefficients(5), invalid_parameter);
}

TEST_CASE("chebyshev member ramification") {
  for (int n = 6; n <= 20; n += 2) {
    CAPTURE(n);
    RationalFunction y = chebyshev_degenerate(n);
    CHECK(y.is_polynomial());
    CHECK(y.map_degree() == n);
    Poly g = y.numerator();
    CHECK(gcd(g, g.derivative()).degree() == n / 2);
    Poly gm1 = g - Poly(1);
    CHECK(gcd(gm1, gm1.derivative()).degree() == n / 2 - 1);
    CHECK(gm1.eval(Rational(0)).is_zero());
    CHECK(gm1.eval(Rational(1)).is_zero());

    ChebyshevFactors f = chebyshev_factors(n);
    CHECK(f.a0.degree() == n / 2);
    CHECK(f.a0.leading() == Rational(1));
    CHECK(f.h0.degree() == n / 2 - 1);
    CHECK(f.h0.leading() == Rational(1));
    Rational c(mpz_class(mpz_class(1) << (2 * n - 2)));
    CHECK(g == c * (f.a0 * f.a0));
    CHECK(gm1 == c * (poly({0, -1, 1}) * (f.h0 * f.h0)));
  }
}

TEST_CASE("degree six chebyshev factors") {
  ChebyshevFactors f = chebyshev_factors(6);
  CHECK(f.a0 ==
        Poly{std::vector<Rational>{Rational(-1, 32), Rational(9, 16),
                                   Rational(-3, 2), Rational(1)}});
  CHECK(f.h0 == Poly{std::vector<Rational>{Rational(3, 16), Rational(-1), Rational(1)}});
  CHECK(f.lambda_lead == Rational(1, 10240));
  // Y = 1/2 is one of the double roots: T_3 vanishes at 0
  CHECK(f.a0.eval(Rational(1, 2)).is_zero());
  CHECK(chebyshev_degenerate(6).eval(Rational(1, 2)) == Rational(0));
}
