#include <random>
#include <set>

#include "doctest.h"
#include "hurwitz/group_order.hpp"
#include "hurwitz/nielsen.hpp"

using namespace hurwitz;

namespace {
Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

NielsenTuple conjugate_all(const NielsenTuple& t, const Permutation& g) {
  NielsenTuple r = t;
  for (auto& s : r.sigma) s = s.conjugated_by(g);
  return r;
}
}  // namespace

TEST_CASE("splitting an even cycle into two involutions") {
  auto c = Permutation::parse(4, "(1,2,3,4)");
  auto split = even_cycle_split(c, 1);
  CHECK(split.sigma == Permutation::parse(4, "(1,2)(3,4)"));
  CHECK(split.tau == Permutation::parse(4, "(2,4)"));
  CHECK(compose(split.sigma, split.tau) == c);

  auto c2 = Permutation::parse(2, "(1,2)");
  auto split2 = even_cycle_split(c2, 1);
  CHECK(split2.sigma == c2);
  CHECK(split2.tau.is_identity());

  // anchors x and c^{m/2}(x) give the same splitting; others differ
  auto c6 = Permutation::parse(6, "(1,2,3,4,5,6)");
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (int x = 1; x <= 6; ++x) {
    auto s = even_cycle_split(c6, x);
    CHECK(compose(s.sigma, s.tau) == c6);
    CHECK(s.sigma.cycle_type() == std::vector<int>{2, 2, 2});
    seen.insert({s.sigma.images(), s.tau.images()});
  }
  CHECK(seen.size() == 3);

  CHECK_THROWS_AS(even_cycle_split(Permutation::parse(5, "(1,2,3)"), 1), odd_cycle_length);
  CHECK_THROWS_AS(even_cycle_split(c, 7), point_not_in_support);
  CHECK_THROWS_AS(even_cycle_split(Permutation::parse(6, "(1,2)(3,4)"), 1), wrong_cycle_type);
}

TEST_CASE("class representatives match the table rows") {
  auto a3 = make_class(6, {Family::A, 3});
  CHECK(a3.sigma[0] == Permutation::parse(6, "(1,2,3,4)"));
  CHECK(a3.sigma[1] == Permutation::parse(6, "(4,5,6)"));
  auto split = even_cycle_split(Permutation::parse(6, "(1,2,3,4,5,6)"), 3);
  CHECK(a3.sigma[2] == split.tau);
  CHECK(a3.sigma[3] == split.sigma);

  auto b2 = make_class(6, {Family::B, 2});
  CHECK(b2.sigma[1] == Permutation::parse(6, "(1,4,5)"));
  auto nu = Permutation::parse(6, "(1,6)");
  auto splitb = even_cycle_split(Permutation::parse(6, "(2,3,4,5)"), 2);
  CHECK(b2.sigma[2] == compose(nu, splitb.tau));
  CHECK(b2.sigma[3] == compose(nu, splitb.sigma));

  auto c1 = make_class(6, {Family::C, 1});
  CHECK(c1.sigma[1] == Permutation::parse(6, "(4,3,2)"));
  auto nuc = Permutation::parse(6, "(6,4)(5,3)");
  auto splitc = even_cycle_split(Permutation::parse(6, "(1,2)"), 1);
  CHECK(c1.sigma[2] == compose(nuc, splitc.tau));
  CHECK(c1.sigma[3] == compose(nuc, splitc.sigma));

  // the distinguished totally real representative for n = 6
  auto a2 = make_class(6, {Family::A, 2});
  CHECK(a2.sigma[0] == Permutation::parse(6, "(1,2,3,4)"));
  CHECK(a2.sigma[1] == Permutation::parse(6, "(4,5,6)"));
  CHECK(a2.sigma[2] == Permutation::parse(6, "(1,3)(4,6)"));
  CHECK(a2.sigma[3] == Permutation::parse(6, "(1,4)(2,3)(5,6)"));

  CHECK_THROWS_AS(make_class(6, {Family::A, 4}), invalid_class_index);
  CHECK_THROWS_AS(make_class(6, {Family::B, 1}), invalid_class_index);
  CHECK_THROWS_AS(make_class(6, {Family::C, 2}), invalid_class_index);
  CHECK_THROWS_AS(make_class(7, {Family::A, 1}), invalid_parameter);
  CHECK_THROWS_AS(make_class(26, {Family::A, 1}), degree_too_large);
}

TEST_CASE("tuple invariants hold for every representative") {
  for (int n = 6; n <= 12; n += 2) {
    auto classes = enumerate_sni(n);
    CHECK(static_cast<int>(classes.size()) == 3 * (n / 2 - 1));
    auto types = class_cycle_types(n);
    for (const auto& [label, t] : classes) {
      CHECK(product_is_identity(t));
      for (int i = 0; i < 4; ++i) CHECK(t.sigma[i].cycle_type() == types[i]);
      CHECK(group_order(t.sigma).symmetric);
    }
  }
  CHECK(enumerate_sni(20).size() == 27);
}

TEST_CASE("canonical forms") {
  std::mt19937 rng(12345);
  for (int n : {6, 8, 10}) {
    auto classes = enumerate_sni(n);
    std::set<NielsenTuple> canon;
    for (const auto& [label, t] : classes) {
      auto ct = canonicalize(t);
      // idempotent
      CHECK(canonicalize(ct) == ct);
      // stable under simultaneous conjugation
      for (int trial = 0; trial < 3; ++trial) {
        auto g = random_perm(n, rng);
        CHECK(canonicalize(conjugate_all(t, g)) == ct);
      }
      canon.insert(ct);
    }
    // injective on the class list
    CHECK(canon.size() == classes.size());
  }
}

TEST_CASE("exhaustive oracle for small degrees") {
  auto oracle6 = brute_force_sni(6);
  CHECK(oracle6.size() == 6);
  std::set<NielsenTuple> canon6;
  for (const auto& [label, t] : enumerate_sni(6)) canon6.insert(canonicalize(t));
  CHECK(std::set<NielsenTuple>(oracle6.begin(), oracle6.end()) == canon6);

  // dropping the generation filter can only add classes
  auto all6 = brute_force_sni(6, false);
  CHECK(all6.size() >= oracle6.size());

  CHECK_THROWS_AS(brute_force_sni(10), degree_too_large);
}
