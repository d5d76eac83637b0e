#include "hurwitz/algebraize.hpp"

#include <doctest.h>

#include "hurwitz/error.hpp"

using namespace hurwitz;

using S = TruncatedSeries;
using PQ = Polynomial<Rational>;

namespace {
PQ lin(const Rational& c) { return PQ{std::vector<Rational>{c, Rational(1)}}; }

RationalFunction rf(std::vector<long> num, std::vector<long> den) {
  std::vector<Rational> n(num.begin(), num.end());
  std::vector<Rational> d(den.begin(), den.end());
  return RationalFunction(PQ(std::move(n)), PQ(std::move(d)));
}
}  // namespace

TEST_CASE("normalization of the degree six branch") {
  SeriesNormalization norm = normalize(newton_lift(6, 16));
  const auto& m = norm.model;
  CHECK(norm.precision == 16);
  // the epsilon0 = mu gauge is not an even parametrization: beta1 carries
  // -mu^3/25 right after -mu^2/25, so the order gcd collapses to 1
  CHECK(norm.parity == 1);

  // the parameter series: beta1 = -8/5 - mu^2/25 - mu^3/25 + ...
  CHECK(m.beta1.coefficient(0) == Rational(-8, 5));
  CHECK(m.beta1.coefficient(1) == Rational(0));
  CHECK(m.beta1.coefficient(2) == Rational(-1, 25));
  CHECK(m.beta1.coefficient(3) == Rational(-1, 25));

  // q1 = -(5 beta1 + 8)/2 once algebraic, so its series starts at mu^2/10
  CHECK(m.q1.coefficient(0) == Rational(0));
  CHECK(m.q1.coefficient(1) == Rational(0));
  CHECK(m.q1.coefficient(2) == Rational(1, 10));

  CHECK(m.a.coeff(3) == S(1));
  CHECK(m.a.coeff(2).is_zero());  // subleading killed by the substitution
  CHECK(m.b.coeff(3) == S(1));
  CHECK(m.h.coeff(2) == S(1));
  CHECK(vanishes_mod(m.residual_at_one(), 16));
  CHECK(vanishes_mod(m.residual_at_lambda(), 16));
}

TEST_CASE("reconstruction recovers the degree six family") {
  ReconstructionResult rec = reconstruct(normalize(newton_lift(6, 64)));
  CHECK(rec.generator == "beta1");
  const auto& m = rec.model;
  CHECK(m.n == 6);
  CHECK(m.beta1 == RationalFunction::variable());
  CHECK(m.beta0 == rf({128, 192, 120, 25}, {96, 36}));
  CHECK(m.gamma == rf({526848, 705600, 315000, 46875}, {2048, 768}));

  CHECK(m.a.coeff(2) == RationalFunction());
  CHECK(m.a.coeff(1) == rf({120, 75}, {16}));
  CHECK(m.a.coeff(0) == rf({4096, 6720, 3600, 625}, {256, 96}));

  CHECK(m.b.coeff(2) == RationalFunction(Rational(3)));
  CHECK(m.b.coeff(1) == rf({168, 75}, {8}));
  CHECK(m.b.coeff(0) == rf({11136, 12960, 4950, 625}, {128, 48}));

  CHECK(m.q1 == rf({-8, -5}, {2}));
  CHECK(m.q0 == rf({2176, 2720, 1050, 125}, {128, 48}));

  CHECK(m.h.coeff(1) == rf({8, 5}, {4}));
  CHECK(m.h.coeff(0) == rf({320, 424, 180, 25}, {64, 24}));

  // the multiplier in factored form, and its value at the origin
  PQ num = lin(Rational(8)) * lin(Rational(13, 5)) * lin(Rational(13, 5)) *
           lin(Rational(8, 5)) * lin(Rational(8, 5)) * lin(Rational(8, 5));
  PQ den = Rational(-15) * (lin(Rational(8, 3)) * lin(Rational(56, 25)) *
                            lin(Rational(56, 25)) * lin(Rational(56, 25)));
  CHECK(m.lambda == RationalFunction(num, den));
  CHECK(m.lambda.eval(Rational(0)) == Rational(-169, 343));
  CHECK(m.lambda.eval(Rational(-8, 5)).is_zero());

  // the two defining identities hold exactly in Q(T)[X]
  CHECK(m.residual_at_one().is_zero());
  CHECK(m.residual_at_lambda().is_zero());
}

TEST_CASE("reconstruction needs enough carried orders") {
  CHECK_THROWS_AS(reconstruct(normalize(newton_lift(6, 12))), insufficient_precision);
}
