#include "hurwitz/verify.hpp"

#include <doctest.h>

#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"

using namespace hurwitz;

namespace {
using PQ = Polynomial<Rational>;

RationalFunction rf(std::vector<Rational> num, std::vector<Rational> den) {
  return RationalFunction(PQ(std::move(num)), PQ(std::move(den)));
}

PQ linear(const Rational& c) { return PQ{std::vector<Rational>{c, Rational(1)}}; }
}  // namespace

TEST_CASE("fiber multiplicity patterns of a rational map") {
  // f = T^2: double point over 0 and over infinity, simple fibers elsewhere
  RationalFunction sq(PQ::monomial(2));
  CHECK(fiber_multiplicities(sq, Rational(0)) == std::vector<int>{2});
  CHECK(fiber_multiplicities(sq, Rational(4)) == std::vector<int>{1, 1});
  CHECK(fiber_multiplicities_at_infinity(sq) == std::vector<int>{2});

  // f = (T^2 - 1)/T^2 = 1 - 1/T^2: the whole fiber over 1 sits at T = infinity
  RationalFunction f = rf({-1, 0, 1}, {0, 0, 1});
  CHECK(fiber_multiplicities(f, Rational(1)) == std::vector<int>{2});
  CHECK(fiber_multiplicities(f, Rational(0)) == std::vector<int>{1, 1});
  CHECK(fiber_multiplicities_at_infinity(f) == std::vector<int>{2});

  // f = T^3/(T - 1): over infinity the pole at 1 is simple, T = infinity double
  RationalFunction g = rf({0, 0, 0, 1}, {-1, 1});
  CHECK(fiber_multiplicities_at_infinity(g) == std::vector<int>{2, 1});
  CHECK(fiber_multiplicities(g, Rational(0)) == std::vector<int>{3});

  CHECK_THROWS_AS(fiber_multiplicities(RationalFunction(Rational(5)), Rational(0)),
                  invalid_parameter);
  CHECK_THROWS_AS(fiber_multiplicities_at_infinity(RationalFunction(Rational(5))),
                  invalid_parameter);
}

TEST_CASE("the degree six branch identity in closed form") {
  // numerator and shifted numerator of the degree six lambda share a factored
  // shape whose difference collapses to a single sixth power pattern
  PQ lhs = linear(Rational(8)) * linear(Rational(13, 5)) * linear(Rational(13, 5)) *
           linear(Rational(8, 5)) * linear(Rational(8, 5)) * linear(Rational(8, 5));
  PQ den_part = linear(Rational(8, 3)) * linear(Rational(56, 25)) *
                linear(Rational(56, 25)) * linear(Rational(56, 25));
  PQ rhs = linear(Rational(2)) * linear(Rational(16, 5)) * linear(Rational(16, 5)) *
           linear(Rational(16, 5)) * linear(Rational(16, 5)) * linear(Rational(16, 5));
  CHECK(lhs + PQ(Rational(15)) * den_part == rhs);
}

TEST_CASE("certification of the degree six family") {
  PipelineResult r = run_pipeline(6);
  const VerificationReport& rep = r.report;
  CHECK(r.reconstruction.generator == "beta1");
  CHECK(r.lambda_series_valuation == 6);
  CHECK(rep.n == 6);
  CHECK(rep.identities_hold);
  CHECK(rep.factors_separable);
  CHECK(rep.fibers_reduced);
  CHECK(rep.hn_degree == 6);
  CHECK(rep.patterns[0] == std::vector<int>{3, 2, 1});
  CHECK(rep.patterns[1] == std::vector<int>{5, 1});
  CHECK(rep.patterns[2] == std::vector<int>{3, 2, 1});
  CHECK(rep.expected == expected_ramification(6));
  CHECK(rep.patterns_match);
  // rows z1 and z3 coincide as multisets at n = 6, so the tie resolves to the
  // ordering that puts z3 over 0
  CHECK(rep.labeling_z3_z2_z1);
  CHECK(rep.assignment == std::array<int, 3>{{2, 1, 0}});
  CHECK(rep.ok);
  CHECK_NOTHROW(require_certified(rep));

  // the boundary point sits over lambda = 0
  CHECK(r.reconstruction.model.lambda.eval(Rational(-8, 5)) == Rational(0));
}

TEST_CASE("certification of the degree eight family") {
  PipelineResult r = run_pipeline(8);
  const VerificationReport& rep = r.report;
  CHECK(rep.ok);
  CHECK(rep.hn_degree == 9);
  CHECK(r.lambda_series_valuation == 8);
  // from degree eight on the rows are all distinct and the fibers over
  // (0, 1, inf) land on (z1, z2, z3): the boundary point T_h lies over 0 with
  // multiplicity n/2, which only row z1 contains
  CHECK(rep.patterns[0] == std::vector<int>{4, 3, 2});
  CHECK(rep.patterns[1] == std::vector<int>{5, 2, 1, 1});
  CHECK(rep.patterns[2] == std::vector<int>{3, 2, 2, 2});
  CHECK(rep.assignment == std::array<int, 3>{{0, 1, 2}});
  CHECK_FALSE(rep.labeling_z3_z2_z1);
  CHECK(r.reconstruction.model.lambda.eval(Rational(-12, 7)) == Rational(0));
  CHECK_NOTHROW(require_certified(rep));
}

TEST_CASE("certification rejects a tampered family") {
  PipelineResult r = run_pipeline(6);
  NormalizedModel<RationalFunction> broken = r.reconstruction.model;
  broken.lambda = broken.lambda * RationalFunction(Rational(2));
  VerificationReport rep = verify_model(broken);
  CHECK_FALSE(rep.identities_hold);
  CHECK_FALSE(rep.ok);
  CHECK_THROWS_AS(require_certified(rep), identity_failed);

  NormalizedModel<RationalFunction> shifted = r.reconstruction.model;
  shifted.beta0 = shifted.beta0 + RationalFunction(Rational(1));
  CHECK_FALSE(verify_model(shifted).identities_hold);
}

TEST_CASE("pipeline input validation") {
  CHECK_THROWS_AS(run_pipeline(7), invalid_parameter);
  CHECK_THROWS_AS(run_pipeline(4), invalid_parameter);
}
