#include "hurwitz/deform.hpp"

#include <doctest.h>

#include "hurwitz/degenerate.hpp"
#include "hurwitz/error.hpp"

using namespace hurwitz;

using S = TruncatedSeries;

TEST_CASE("system shape and marker equations") {
  DeformationSystem sys = build_system(6);
  CHECK(sys.n == 6);
  CHECK(sys.equations.size() == 12);
  CHECK(sys.unknown_count() == 12);
  CHECK(sys.mu_index() == 12);
  CHECK(sys.unknown_names.front() == "alpha0");
  CHECK(sys.unknown_names.back() == "lambda");

  auto V = [](int i) { return MultiPoly::variable(i); };
  // X^5 coefficient of the first identity: 2 alpha2 - (delta2 - 3)
  CHECK(sys.equations[5] == MultiPoly(2) * V(2) - V(8) + MultiPoly(3));
  // X^0 coefficients of both identities
  CHECK(sys.equations[0] == V(0) * V(0) + V(6) - V(5) * V(3));
  CHECK(sys.equations[6] == V(0) * V(0) - V(11) * V(5) * V(3));
  // X^1 of the second: 2 alpha0 alpha1 + mu eta0^2 - lambda gamma beta1
  CHECK(sys.equations[7] == MultiPoly(2) * V(0) * V(1) + V(12) * V(9) * V(9) -
                                V(11) * V(5) * V(4));

  for (int n = 8; n <= 12; n += 2) {
    DeformationSystem s = build_system(n);
    CHECK(s.equations.size() == static_cast<size_t>(2 * n));
    CHECK(s.unknown_count() == 2 * n);
  }
  CHECK_THROWS_AS(build_system(7), invalid_parameter);
}

TEST_CASE("degenerate member is an exact zero of the system") {
  for (int n : {6, 8}) {
    CAPTURE(n);
    DeformationSystem sys = build_system(n);
    CoverModel<Rational> m0 = initial_coefficients(n);
    std::vector<Rational> point;
    point.insert(point.end(), m0.alpha.begin(), m0.alpha.end());
    point.push_back(m0.beta0);
    point.push_back(m0.beta1);
    point.push_back(m0.gamma);
    point.insert(point.end(), m0.delta.begin(), m0.delta.end());
    point.insert(point.end(), m0.eta.begin(), m0.eta.end());
    point.push_back(m0.lambda);
    point.push_back(Rational(0));  // mu
    for (const Rational& r : sys.eval(point)) CHECK(r.is_zero());

    point[sys.unknown_count() - 1] = Rational(1, 7);  // perturb lambda
    bool hit = false;
    for (const Rational& r : sys.eval(point))
      if (!r.is_zero()) hit = true;
    CHECK(hit);
  }
  CHECK_THROWS_AS(build_system(6).eval({Rational(1)}), invalid_parameter);
}

TEST_CASE("newton lift at low precision") {
  DeformationState st = newton_lift(6, 4);
  CHECK(st.n == 6);
  CHECK(st.precision == 4);
  CHECK(st.model.epsilon0 == S::variable());
  CHECK(st.model.lambda.is_zero());  // valuation 6 is invisible mod mu^4
  CHECK(vanishes_mod(st.model.residual_at_one(), 4));
  CHECK(vanishes_mod(st.model.residual_at_lambda(), 4));
  CHECK_THROWS_AS(newton_lift(6, 0), invalid_parameter);
  CHECK_THROWS_AS(newton_lift(9, 4), invalid_parameter);
}

TEST_CASE("newton lift degree six") {
  DeformationState st = newton_lift(6, 12);
  const auto& m = st.model;
  CHECK(vanishes_mod(m.residual_at_one(), 12));
  CHECK(vanishes_mod(m.residual_at_lambda(), 12));

  // multiplier vanishes to order exactly n, with the Chebyshev lead
  CHECK(m.lambda.valuation() == 6);
  CHECK(m.lambda.coefficient(6) == Rational(1, 10240));

  // leading behavior of the upper factor matches the lower degenerate one
  CHECK(m.alpha[2].valuation() == 1);
  CHECK(m.alpha[2].coefficient(1) == Rational(-3, 2));
  CHECK(m.alpha[1].coefficient(2) == Rational(9, 16));
  CHECK(m.alpha[0].coefficient(3) == Rational(-1, 32));
  CHECK(m.eta[1].coefficient(1) == Rational(-1));
  CHECK(m.eta[0].coefficient(2) == Rational(3, 16));

  // constant terms are the degenerate member
  CoverModel<Rational> m0 = initial_coefficients(6);
  CHECK(m.beta0.coefficient(0) == m0.beta0);
  CHECK(m.beta1.coefficient(0) == m0.beta1);
  CHECK(m.gamma.coefficient(0) == m0.gamma);
  for (int k = 0; k < 3; ++k) CHECK(m.delta[k].coefficient(0) == m0.delta[k]);

  // refining the precision does not disturb lower order terms
  DeformationState st5 = newton_lift(6, 5);
  CHECK(equal_mod(st5.model.beta0, m.beta0, 5));
  CHECK(equal_mod(st5.model.beta1, m.beta1, 5));
  CHECK(equal_mod(st5.model.lambda, m.lambda, 5));
  CHECK(equal_mod(st5.model.alpha[0], m.alpha[0], 5));
}

TEST_CASE("newton lift degree eight") {
  DeformationState st = newton_lift(8, 10);
  const auto& m = st.model;
  CHECK(vanishes_mod(m.residual_at_one(), 10));
  CHECK(vanishes_mod(m.residual_at_lambda(), 10));
  CHECK(m.lambda.valuation() == 8);
  CHECK(m.gamma.coefficient(0) == Rational(28));
  CHECK(m.lambda.coefficient(8) == Rational(1, 42 * 8192));
}
