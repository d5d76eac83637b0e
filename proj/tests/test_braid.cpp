#include <algorithm>
#include <set>

#include "doctest.h"
#include "hurwitz/braid.hpp"

using namespace hurwitz;

namespace {
NielsenTuple rep(int n, Family f, int i) { return make_class(n, {f, i}); }

std::multiset<std::vector<int>> type_multiset(const NielsenTuple& t) {
  std::multiset<std::vector<int>> m;
  for (const auto& s : t.sigma) m.insert(s.cycle_type());
  return m;
}
}  // namespace

TEST_CASE("elementary moves") {
  auto t = rep(6, Family::A, 2);
  for (int i = 1; i <= 3; ++i) {
    auto u = braid_act_raw(t, i);
    CHECK(u.sigma[i - 1] == t.sigma[i].conjugated_by(t.sigma[i - 1]));
    CHECK(u.sigma[i] == t.sigma[i - 1]);
    for (int j = 0; j < 4; ++j)
      if (j != i - 1 && j != i) CHECK(u.sigma[j] == t.sigma[j]);
    CHECK(product_is_identity(u));
    CHECK(type_multiset(u) == type_multiset(t));
    CHECK(braid_act_inverse_raw(u, i) == t);
    CHECK(braid_act_raw(braid_act_inverse_raw(t, i), i) == t);
  }
  CHECK_THROWS_AS(braid_act_raw(t, 0), invalid_parameter);
  CHECK_THROWS_AS(braid_act_raw(t, 4), invalid_parameter);
  CHECK_THROWS_AS(braid_word(t, {1, 0}), invalid_parameter);
}

TEST_CASE("relations of the sphere braid group") {
  for (int n : {6, 8}) {
    for (const auto& [label, t] : enumerate_sni(n)) {
      // Q_1 Q_2 Q_3^2 Q_2 Q_1 conjugates the whole tuple by its first entry,
      // so it fixes every class
      NielsenTuple u = t;
      for (int letter : {1, 2, 3, 3, 2, 1}) u = braid_act_raw(u, letter);
      for (int j = 0; j < 4; ++j)
        CHECK(u.sigma[j] == t.sigma[j].conjugated_by(t.sigma[0]));
      CHECK(braid_word(t, {1, 2, 3, 3, 2, 1}) == canonicalize(t));

      // distant generators commute
      CHECK(braid_act_raw(braid_act_raw(t, 1), 3) == braid_act_raw(braid_act_raw(t, 3), 1));

      // Q_i^2 conjugates the two touched coordinates by their product
      auto g = compose(t.sigma[0], t.sigma[1]);
      NielsenTuple v = t;
      v.sigma[0] = t.sigma[0].conjugated_by(g);
      v.sigma[1] = t.sigma[1].conjugated_by(g);
      CHECK(braid_word(t, {1, 1}) == canonicalize(v));

      CHECK(braid_word(t, {2, -2, 3, -3, 1, -1}) == canonicalize(t));
    }
  }
}

TEST_CASE("ramification data of the parameter curve") {
  auto z6 = expected_ramification(6);
  CHECK(z6[0] == std::vector<int>{3, 2, 1});
  CHECK(z6[1] == std::vector<int>{5, 1});
  CHECK(z6[2] == std::vector<int>{3, 2, 1});
  auto z8 = expected_ramification(8);
  CHECK(z8[0] == std::vector<int>{4, 3, 2});
  CHECK(z8[1] == std::vector<int>{5, 2, 1, 1});
  CHECK(z8[2] == std::vector<int>{3, 2, 2, 2});
  for (int n = 6; n <= 20; n += 2) {
    int d = 3 * (n / 2 - 1);
    for (const auto& part : expected_ramification(n)) {
      int sum = 0;
      for (int e : part) sum += e;
      CHECK(sum == d);
      CHECK(std::is_sorted(part.rbegin(), part.rend()));
    }
  }
  CHECK_THROWS_AS(expected_ramification(7), invalid_parameter);
  CHECK_THROWS_AS(expected_ramification(4), invalid_parameter);
}

TEST_CASE("monodromy of the class action") {
  for (int n : {6, 8}) {
    auto rep = gamma_monodromy(n);
    CHECK(rep.degree == 3 * (n / 2 - 1));
    CHECK(rep.matches_expected);
    CHECK(rep.gamma3_consistent);
    CHECK(rep.orbit_count == 1);
    CHECK(rep.genus == 0);
  }
  auto rep6 = gamma_monodromy(6);
  CHECK(rep6.cycle_types[0] == std::vector<int>{3, 2, 1});
  CHECK(rep6.cycle_types[1] == std::vector<int>{5, 1});
  CHECK(rep6.cycle_types[2] == std::vector<int>{3, 2, 1});
}

TEST_CASE("closed form of the class action") {
  for (int n : {10, 12}) {
    auto computed = gamma_monodromy(n);
    auto predicted = predicted_monodromy(n);
    CHECK(computed.gamma1 == predicted.gamma1);
    CHECK(computed.gamma2 == predicted.gamma2);
    CHECK(computed.gamma12 == predicted.gamma12);
  }
  CHECK_THROWS_AS(predicted_monodromy(8), invalid_parameter);
}

TEST_CASE("global braid orbit") {
  auto rep = braid_orbits(6);
  CHECK(rep.class_count == 6);
  CHECK(rep.orbit_count == 1);
  // the four cycle types are pairwise distinct, so the full orbit carries all
  // 24 coordinate orderings of the six classes
  CHECK(rep.reachable_count == 24 * 6);
}
