#include "hurwitz/nielsen.hpp"

#include <algorithm>
#include <set>

#include "hurwitz/group_order.hpp"

namespace hurwitz {

namespace {

void check_n(int n) {
  if (n < 6 || n % 2 != 0) throw invalid_parameter("degree must be even and at least 6");
  if (n > kMaxStabilizerChainDegree)
    throw degree_too_large("class machinery capped at degree " +
                           std::to_string(kMaxStabilizerChainDegree));
}

std::vector<int> range_cycle(int from, int to) {
  std::vector<int> v;
  for (int k = from; k <= to; ++k) v.push_back(k);
  return v;
}

std::vector<int> tuple_key(const NielsenTuple& t) {
  std::vector<int> key;
  key.reserve(4 * t.n());
  for (const auto& s : t.sigma) {
    auto im = s.images();
    key.insert(key.end(), im.begin(), im.end());
  }
  return key;
}

}  // namespace

bool operator<(const NielsenTuple& a, const NielsenTuple& b) {
  return tuple_key(a) < tuple_key(b);
}

std::string ClassLabel::str() const {
  const char* fam = family == Family::A ? "a" : family == Family::B ? "b" : "c";
  return std::string(fam) + "_" + std::to_string(index);
}

std::vector<std::vector<int>> class_cycle_types(int n) {
  check_n(n);
  std::vector<std::vector<int>> types(4);
  types[0] = {n - 2, 1, 1};
  types[1].assign(n - 2, 1);
  types[1][0] = 3;
  types[2].assign((n - 2) / 2 + 2, 1);
  for (int i = 0; i < (n - 2) / 2; ++i) types[2][i] = 2;
  types[3].assign(n / 2, 2);
  return types;
}

CycleSplit even_cycle_split(const Permutation& c, int x) {
  auto cycles = c.cycles(false);
  if (cycles.size() != 1)
    throw wrong_cycle_type("expected a single nontrivial cycle, got " + c.cycle_string());
  const auto& cyc = cycles[0];
  int m = static_cast<int>(cyc.size());
  if (m % 2 != 0) throw odd_cycle_length("cycle length " + std::to_string(m) + " is odd");
  int pos = -1;
  for (int i = 0; i < m; ++i)
    if (cyc[i] == x) { pos = i; break; }
  if (pos < 0)
    throw point_not_in_support(std::to_string(x) + " not in support of " + c.cycle_string());

  auto at = [&](long long k) {  // c^k(x)
    long long r = (pos + k) % m;
    if (r < 0) r += m;
    return cyc[static_cast<size_t>(r)];
  };

  std::vector<std::vector<int>> sig, tau;
  for (int i = 1; i <= m / 2; ++i) sig.push_back({at(1 - i), at(i)});
  for (int j = 1; j <= m / 2 - 1; ++j) tau.push_back({at(j), at(-j)});
  return CycleSplit{Permutation::from_cycles(c.degree(), sig),
                    Permutation::from_cycles(c.degree(), tau)};
}

std::vector<ClassLabel> all_class_labels(int n) {
  check_n(n);
  std::vector<ClassLabel> labels;
  for (int i = 1; i <= n / 2; ++i) labels.push_back({Family::A, i});
  for (int i = 2; i <= n / 2; ++i) labels.push_back({Family::B, i});
  for (int i = 1; i <= n / 2 - 2; ++i) labels.push_back({Family::C, i});
  return labels;
}

NielsenTuple make_class(int n, const ClassLabel& label) {
  check_n(n);
  Permutation s1 = Permutation::single_cycle(n, range_cycle(1, n - 2));
  Permutation s2(n), s3(n), s4(n);
  switch (label.family) {
    case Family::A: {
      if (label.index < 1 || label.index > n / 2)
        throw invalid_class_index("family A index out of range: " + label.str());
      s2 = Permutation::from_cycles(n, {{n - 2, n - 1, n}});
      auto split = even_cycle_split(Permutation::single_cycle(n, range_cycle(1, n)), label.index);
      s3 = split.tau;
      s4 = split.sigma;
      break;
    }
    case Family::B: {
      if (label.index < 2 || label.index > n / 2)
        throw invalid_class_index("family B index out of range: " + label.str());
      s2 = Permutation::from_cycles(n, {{1, n - 2, n - 1}});
      Permutation nu = Permutation::transposition(n, 1, n);
      auto split = even_cycle_split(Permutation::single_cycle(n, range_cycle(2, n - 1)), label.index);
      s3 = compose(nu, split.tau);
      s4 = compose(nu, split.sigma);
      break;
    }
    case Family::C: {
      if (label.index < 1 || label.index > n / 2 - 2)
        throw invalid_class_index("family C index out of range: " + label.str());
      s2 = Permutation::from_cycles(n, {{n - 2, n - 3, n - 4}});
      Permutation nu = Permutation::from_cycles(n, {{n, n - 2}, {n - 1, n - 3}});
      auto split = even_cycle_split(Permutation::single_cycle(n, range_cycle(1, n - 4)), label.index);
      s3 = compose(nu, split.tau);
      s4 = compose(nu, split.sigma);
      break;
    }
  }
  NielsenTuple t{{s1, s2, s3, s4}};
  validate_tuple(t);
  return t;
}

std::vector<std::pair<ClassLabel, NielsenTuple>> enumerate_sni(int n) {
  std::vector<std::pair<ClassLabel, NielsenTuple>> out;
  for (const auto& label : all_class_labels(n)) out.emplace_back(label, make_class(n, label));
  return out;
}

bool product_is_identity(const NielsenTuple& t) {
  Permutation p = t.sigma[0];
  for (size_t i = 1; i < t.sigma.size(); ++i) p = compose(p, t.sigma[i]);
  return p.is_identity();
}

void validate_tuple(const NielsenTuple& t) {
  if (t.sigma.size() != 4) throw invalid_parameter("tuple must have four coordinates");
  int n = t.n();
  check_n(n);
  for (const auto& s : t.sigma)
    if (s.degree() != n) throw degree_mismatch();
  auto types = class_cycle_types(n);
  for (int i = 0; i < 4; ++i)
    if (t.sigma[i].cycle_type() != types[i])
      throw wrong_cycle_type("coordinate " + std::to_string(i + 1) + " has the wrong cycle type");
  if (!product_is_identity(t)) throw invalid_parameter("tuple product is not the identity");
  if (!group_order(t.sigma).symmetric)
    throw invalid_parameter("tuple does not generate the symmetric group");
}

NielsenTuple canonicalize(const NielsenTuple& t) {
  if (t.sigma.size() != 4) throw invalid_parameter("tuple must have four coordinates");
  int n = t.n();
  // locate the unique coordinate of type (n-2, 1, 1)
  std::vector<int> long_type = {n - 2, 1, 1};
  int anchor = -1;
  for (int i = 0; i < 4; ++i) {
    if (t.sigma[i].cycle_type() == long_type) {
      if (anchor >= 0) throw wrong_cycle_type("several coordinates of anchor type");
      anchor = i;
    }
  }
  if (anchor < 0) throw wrong_cycle_type("no coordinate of anchor type");

  const Permutation& a = t.sigma[anchor];
  auto cyc = a.cycles(false)[0];
  std::vector<int> fixed;
  {
    std::vector<bool> moved(n + 1, false);
    for (int p : cyc) moved[p] = true;
    for (int p = 1; p <= n; ++p)
      if (!moved[p]) fixed.push_back(p);
  }

  // g0 conjugates the anchor to (1,...,n-2) with fixed points n-1, n
  std::vector<int> g0img(n);
  for (int k = 0; k < n - 2; ++k) g0img[cyc[k] - 1] = k + 1;
  g0img[fixed[0] - 1] = n - 1;
  g0img[fixed[1] - 1] = n;
  Permutation g0 = Permutation::from_images(g0img);

  Permutation rot = Permutation::single_cycle(n, range_cycle(1, n - 2));
  Permutation swap_fixed = Permutation::transposition(n, n - 1, n);

  bool have_best = false;
  NielsenTuple best{{Permutation(n), Permutation(n), Permutation(n), Permutation(n)}};
  std::vector<int> best_key;
  Permutation zrot(n);
  for (int r = 0; r < n - 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      Permutation z = s == 0 ? zrot : compose(swap_fixed, zrot);
      Permutation h = compose(z, g0);
      NielsenTuple cand{{t.sigma[0].conjugated_by(h), t.sigma[1].conjugated_by(h),
                         t.sigma[2].conjugated_by(h), t.sigma[3].conjugated_by(h)}};
      auto key = tuple_key(cand);
      if (!have_best || key < best_key) {
        best = std::move(cand);
        best_key = std::move(key);
        have_best = true;
      }
    }
    zrot = compose(rot, zrot);
  }
  return best;
}

std::vector<NielsenTuple> brute_force_sni(int n, bool generation_filter) {
  if (n != 6 && n != 8)
    throw degree_too_large("exhaustive enumeration is only feasible for n in {6, 8}");
  Permutation s1 = Permutation::single_cycle(n, range_cycle(1, n - 2));
  auto types = class_cycle_types(n);

  // all 3-cycles
  std::vector<Permutation> three_cycles;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        three_cycles.push_back(Permutation::from_cycles(n, {{a, b, c}}));
        three_cycles.push_back(Permutation::from_cycles(n, {{a, c, b}}));
      }

  // all involutions with exactly two fixed points: choose the fixed pair,
  // then perfect matchings of the rest
  std::vector<Permutation> involutions;
  {
    std::vector<std::vector<int>> pairs;
    std::vector<int> points;
    auto rec = [&](auto&& self) -> void {
      if (points.empty()) {
        involutions.push_back(Permutation::from_cycles(n, pairs));
        return;
      }
      int a = points[0];
      for (size_t k = 1; k < points.size(); ++k) {
        int b = points[k];
        std::vector<int> rest;
        for (size_t j = 1; j < points.size(); ++j)
          if (j != k) rest.push_back(points[j]);
        pairs.push_back({a, b});
        std::swap(points, rest);
        self(self);
        std::swap(points, rest);
        pairs.pop_back();
      }
    };
    for (int f1 = 1; f1 <= n; ++f1)
      for (int f2 = f1 + 1; f2 <= n; ++f2) {
        points.clear();
        for (int p = 1; p <= n; ++p)
          if (p != f1 && p != f2) points.push_back(p);
        rec(rec);
      }
  }

  std::set<NielsenTuple> classes;
  for (const auto& s2 : three_cycles) {
    Permutation s12 = compose(s1, s2);
    for (const auto& s3 : involutions) {
      Permutation s4 = compose(s12, s3).inverse();
      if (s4.cycle_type() != types[3]) continue;
      NielsenTuple t{{s1, s2, s3, s4}};
      if (generation_filter && !group_order(t.sigma).symmetric) continue;
      classes.insert(canonicalize(t));
    }
  }
  return {classes.begin(), classes.end()};
}

}  // namespace hurwitz
