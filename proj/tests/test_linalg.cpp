#include <random>

#include "doctest.h"
#include "hurwitz/linalg.hpp"
#include "hurwitz/modp.hpp"
#include "hurwitz/sturm.hpp"

using namespace hurwitz;

using QP = Polynomial<Rational>;

namespace {
QP parse_poly(const std::vector<long>& coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return QP(std::move(c));
}
}  // namespace

TEST_CASE("exact linear solve") {
  std::vector<std::vector<Rational>> id2{{1, 0}, {0, 1}};
  auto r = linear_solve_exact(id2, {Rational(7), Rational(-3)});
  REQUIRE(r.status == SolveStatus::kUnique);
  CHECK(r.solution == std::vector<Rational>{7, -3});

  std::vector<std::vector<Rational>> sing{{1, 1}, {1, 1}};
  CHECK(linear_solve_exact(sing, {Rational(1), Rational(2)}).status == SolveStatus::kInconsistent);

  std::vector<std::vector<Rational>> diag{{2, 0}, {0, 3}};
  auto rd = linear_solve_exact(diag, {Rational(1), Rational(1)});
  REQUIRE(rd.status == SolveStatus::kUnique);
  CHECK(rd.solution == std::vector<Rational>{Rational(1, 2), Rational(1, 3)});

  std::vector<std::vector<Rational>> a{{2, 1}, {1, 3}};
  auto ra = linear_solve_exact(a, {Rational(5), Rational(10)});
  REQUIRE(ra.status == SolveStatus::kUnique);
  CHECK(ra.solution == std::vector<Rational>{1, 3});

  auto ru = linear_solve_exact({{1, 2}}, {Rational(3)});
  REQUIRE(ru.status == SolveStatus::kUnderdetermined);
  CHECK(ru.solution[0] + Rational(2) * ru.solution[1] == Rational(3));
  REQUIRE(ru.nullspace.size() == 1);
  CHECK(ru.nullspace[0][0] + Rational(2) * ru.nullspace[0][1] == Rational(0));

  auto kb = kernel_basis({{1, 2}, {2, 4}});
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] + Rational(2) * kb[0][1] == Rational(0));
  CHECK_FALSE((kb[0][0].is_zero() && kb[0][1].is_zero()));

  CHECK_THROWS_AS(linear_solve_exact(id2, {Rational(1)}), invalid_parameter);
}

TEST_CASE("random solve round trip") {
  std::mt19937 rng(991);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 6;
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    std::vector<Rational> x(n);
    for (auto& row : A)
      for (auto& v : row) v = Rational(num(rng), den(rng));
    for (auto& v : x) v = Rational(num(rng), den(rng));
    std::vector<Rational> b(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i] += A[i][j] * x[j];
    auto r = linear_solve_exact(A, b);
    if (r.status == SolveStatus::kUnique) CHECK(r.solution == x);
    else {
      // consistent by construction even if singular
      CHECK(r.status == SolveStatus::kUnderdetermined);
    }
  }
}

TEST_CASE("sturm root counting") {
  QP x2m2 = parse_poly({-2, 0, 1});
  CHECK(sturm_count(x2m2) == 2);
  CHECK(sturm_count(parse_poly({1, 0, 1})) == 0);
  QP xm1 = parse_poly({-1, 1});
  QP f = xm1 * xm1 * xm1 * parse_poly({2, 1});
  CHECK(sturm_count(f) == 2);
  CHECK(sturm_count(x2m2, Rational(0), Rational(2)) == 1);
  // half open (a, b]: excludes a, includes b
  QP g = xm1 * parse_poly({-2, 1});
  CHECK(sturm_count(g, Rational(1), Rational(2)) == 1);
  CHECK(sturm_count(g, std::nullopt, Rational(1)) == 1);
  CHECK(sturm_count(g, Rational(2), std::nullopt) == 0);
  CHECK_THROWS_AS(sturm_count(QP()), invalid_parameter);
  CHECK_THROWS_AS(sturm_count(x2m2, Rational(2), Rational(1)), invalid_parameter);

  // products of distinct linear factors: count equals degree
  QP prod(1);
  for (long r = -3; r <= 3; ++r) prod *= parse_poly({-r, 1});
  CHECK(sturm_count(prod) == 7);
  CHECK(sturm_count(prod * prod) == 7);
}

TEST_CASE("factor degree patterns mod p") {
  QP x2p1 = parse_poly({1, 0, 1});
  CHECK(modp_factor_degrees(x2p1, 3) == std::vector<int>{2});
  CHECK(modp_factor_degrees(x2p1, 5) == std::vector<int>{1, 1});
  CHECK(modp_factor_degrees(parse_poly({-1, 0, 1}), 7) == std::vector<int>{1, 1});
  CHECK(modp_factor_degrees(parse_poly({-1, -1, 0, 1}), 2) == std::vector<int>{3});
  // (X^2+X+1)(X^3+X+1) irreducible factors mod 2
  QP f = parse_poly({1, 1, 1}) * parse_poly({1, 1, 0, 1});
  CHECK(modp_factor_degrees(f, 2) == std::vector<int>{2, 3});
  // squarefree failure: X^2 - 1 = (X+1)^2 mod 2
  CHECK_THROWS_AS(modp_factor_degrees(parse_poly({-1, 0, 1}), 2), bad_reduction_prime);
  // denominator divisible by p
  QP bad({Rational(1, 3), Rational(1)});
  CHECK_THROWS_AS(modp_factor_degrees(bad, 3), bad_reduction_prime);
  // leading coefficient divisible by p
  CHECK_THROWS_AS(modp_factor_degrees(parse_poly({1, 1, 5}), 5), bad_reduction_prime);
  CHECK_THROWS_AS(modp_factor_degrees(x2p1, 4), invalid_parameter);

  // degree pattern sums to the degree
  QP big = parse_poly({3, 0, -2, 0, 0, 1, 7, 1});
  for (long p : {3L, 5L, 11L, 13L}) {
    try {
      auto pat = modp_factor_degrees(big, p);
      int sum = 0;
      for (int d : pat) sum += d;
      CHECK(sum == big.degree());
    } catch (const bad_reduction_prime&) {
      continue;
    }
  }
}

TEST_CASE("prime helpers") {
  CHECK(is_small_prime(2));
  CHECK(is_small_prime(199));
  CHECK_FALSE(is_small_prime(1));
  CHECK_FALSE(is_small_prime(91));
  auto ps = odd_primes_below(20);
  CHECK(ps == std::vector<long>{3, 5, 7, 11, 13, 17, 19});
}
