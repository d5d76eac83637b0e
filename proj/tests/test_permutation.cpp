#include <random>

#include "doctest.h"
#include "hurwitz/group_order.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

TEST_CASE("permutation construction and application") {
  auto p = Permutation::parse(4, "(1,2)(3,4)");
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(3) == 4);
  CHECK(p.cycle_string() == "(1,2)(3,4)");
  CHECK(p.images() == std::vector<int>{2, 1, 4, 3});

  auto q = Permutation::parse(4, "(2,4)");
  // q acts first
  CHECK(compose(p, q) == Permutation::parse(4, "(1,2,3,4)"));
  CHECK(compose(q, p) == Permutation::parse(4, "(1,4,3,2)"));

  CHECK(Permutation::parse(3, "()").is_identity());
  CHECK(Permutation(5).is_identity());
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), bad_permutation);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), bad_permutation);
  CHECK_THROWS_AS(Permutation::parse(3, "(1,5)"), point_not_in_support);
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), degree_mismatch);
}

TEST_CASE("permutation invariants") {
  auto c = Permutation::parse(6, "(1,2,3,4,5)");
  CHECK(c.cycle_type() == std::vector<int>{5, 1});
  CHECK(c.parity() == 1);
  CHECK(c.order() == 5);
  CHECK(c.inverse() == Permutation::parse(6, "(5,4,3,2,1)"));
  CHECK(compose(c, c.inverse()).is_identity());

  auto t = Permutation::parse(6, "(1,2)");
  CHECK(t.parity() == -1);
  CHECK(compose(c, t).parity() == -1);

  auto g = Permutation::parse(6, "(1,4)(2,5,6)");
  // conjugation relabels the points of each cycle
  CHECK(c.conjugated_by(g) == Permutation::parse(6, "(4,5,3,1,6)"));
  CHECK(c.conjugated_by(g).cycle_type() == c.cycle_type());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> img(8);
    for (int i = 0; i < 8; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    auto r = Permutation::from_images(img);
    CHECK(compose(r, r.inverse()).is_identity());
    CHECK(r.parity() == r.inverse().parity());
    CHECK(Permutation::parse(8, r.cycle_string()) == r);
  }
}

TEST_CASE("group order via stabilizer chain") {
  auto c5 = Permutation::parse(5, "(1,2,3,4,5)");
  auto t5 = Permutation::parse(5, "(1,2)");
  auto rep = group_order({c5, t5});
  CHECK(rep.order == 120);
  CHECK(rep.transitive);
  CHECK(rep.symmetric);
  CHECK_FALSE(rep.alternating);

  auto a4 = group_order({Permutation::parse(4, "(1,2,3)"), Permutation::parse(4, "(2,3,4)")});
  CHECK(a4.order == 12);
  CHECK(a4.alternating);
  CHECK_FALSE(a4.symmetric);

  auto klein = group_order({Permutation::parse(4, "(1,2)(3,4)"), Permutation::parse(4, "(1,3)(2,4)")});
  CHECK(klein.order == 4);
  CHECK(klein.transitive);

  // a 7-cycle and a transposition generate all of S_7
  auto s7 = group_order({Permutation::parse(7, "(1,2,3,4,5,6,7)"), Permutation::parse(7, "(1,2)")});
  CHECK(s7.order == 5040);
  CHECK(s7.symmetric);

  auto fixed = group_order({Permutation::parse(5, "(1,2,3)")});
  CHECK(fixed.order == 3);
  CHECK_FALSE(fixed.transitive);

  // order of the full symmetric group at the degree cap needs big integers
  std::vector<int> long_cycle(24);
  for (int i = 0; i < 24; ++i) long_cycle[i] = i + 1;
  auto s24 = group_order({Permutation::single_cycle(24, long_cycle), Permutation::parse(24, "(1,2)")});
  CHECK(s24.order == factorial(24));

  CHECK_THROWS_AS(group_order({Permutation(25)}), degree_too_large);
  CHECK_THROWS_AS(group_order({}), invalid_parameter);
}
