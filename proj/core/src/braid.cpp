#include "hurwitz/braid.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace hurwitz {

namespace {
void check_coord(const NielsenTuple& t, int i) {
  if (t.sigma.size() != 4) throw invalid_parameter("tuple must have four coordinates");
  if (i < 1 || i > 3) throw invalid_parameter("braid generator index must be 1, 2 or 3");
}
}  // namespace

NielsenTuple braid_act_raw(const NielsenTuple& t, int i) {
  check_coord(t, i);
  NielsenTuple r = t;
  const Permutation& a = t.sigma[i - 1];
  const Permutation& b = t.sigma[i];
  r.sigma[i - 1] = b.conjugated_by(a);
  r.sigma[i] = a;
  return r;
}

NielsenTuple braid_act_inverse_raw(const NielsenTuple& t, int i) {
  check_coord(t, i);
  NielsenTuple r = t;
  const Permutation& a = t.sigma[i - 1];
  const Permutation& b = t.sigma[i];
  r.sigma[i - 1] = b;
  r.sigma[i] = a.conjugated_by(b.inverse());
  return r;
}

NielsenTuple braid_act(const NielsenTuple& t, int i) { return canonicalize(braid_act_raw(t, i)); }

NielsenTuple braid_act_inverse(const NielsenTuple& t, int i) {
  return canonicalize(braid_act_inverse_raw(t, i));
}

NielsenTuple braid_word(const NielsenTuple& t, const std::vector<int>& word) {
  NielsenTuple r = t;
  for (int letter : word) {
    if (letter == 0) throw invalid_parameter("zero letter in braid word");
    r = letter > 0 ? braid_act_raw(r, letter) : braid_act_inverse_raw(r, -letter);
  }
  return canonicalize(r);
}

std::vector<std::vector<int>> expected_ramification(int n) {
  if (n < 6 || n % 2 != 0) throw invalid_parameter("degree must be even and at least 6");
  std::vector<std::vector<int>> z(3);
  z[0] = {n / 2, n / 2 - 1, n / 2 - 2};
  if (n % 4 == 0) {
    z[1] = {5, 1, 1};
    z[1].insert(z[1].end(), 3 * n / 4 - 5, 2);
    z[2] = {3};
    z[2].insert(z[2].end(), 3 * n / 4 - 3, 2);
  } else {
    z[1] = {5, 1};
    z[1].insert(z[1].end(), 3 * (n - 6) / 4, 2);
    z[2] = {3, 1};
    z[2].insert(z[2].end(), (3 * n - 14) / 4, 2);
  }
  for (auto& part : z) std::sort(part.rbegin(), part.rend());
  return z;
}

MonodromyReport gamma_monodromy(int n) {
  auto classes = enumerate_sni(n);
  const int d = static_cast<int>(classes.size());

  std::vector<NielsenTuple> canon;
  std::map<NielsenTuple, int> index;
  MonodromyReport rep;
  rep.n = n;
  rep.degree = d;
  for (int k = 0; k < d; ++k) {
    canon.push_back(canonicalize(classes[k].second));
    index[canon.back()] = k;
    rep.labels.push_back(classes[k].first);
  }

  auto action = [&](const std::vector<int>& word) {
    std::vector<int> img(d);
    for (int k = 0; k < d; ++k) {
      auto it = index.find(braid_word(canon[k], word));
      if (it == index.end()) throw error("braid word left the class list");
      img[k] = it->second + 1;
    }
    return Permutation::from_images(img);
  };

  rep.gamma1 = action({1, 1});
  rep.gamma2 = action({2, 2});
  rep.gamma12 = compose(rep.gamma1, rep.gamma2);
  Permutation word12 = action({1, 1, 2, 2});
  Permutation gamma3 = action({-2, 3, 3, 2});

  if (compose(rep.gamma2, rep.gamma1) != word12)
    throw error("composite action disagrees with letterwise action");
  rep.gamma3_consistent = gamma3 == word12.inverse();

  rep.cycle_types = {rep.gamma1.cycle_type(), rep.gamma2.cycle_type(), rep.gamma12.cycle_type()};
  rep.matches_expected = rep.cycle_types == expected_ramification(n);

  // orbits of the group generated by the two actions
  std::vector<int> comp(d, -1);
  int orbits = 0;
  for (int s = 0; s < d; ++s) {
    if (comp[s] >= 0) continue;
    ++orbits;
    std::queue<int> q;
    q.push(s);
    comp[s] = orbits;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const Permutation* g : {&rep.gamma1, &rep.gamma2}) {
        for (int y : {g->apply(x + 1) - 1, g->inverse().apply(x + 1) - 1}) {
          if (comp[y] < 0) {
            comp[y] = orbits;
            q.push(y);
          }
        }
      }
    }
  }
  rep.orbit_count = orbits;

  // Riemann-Hurwitz over the base line: three branch points contribute
  int excess = 0;
  for (const Permutation* g : {&rep.gamma1, &rep.gamma2, &rep.gamma12})
    excess += d - static_cast<int>(g->cycles(true).size());
  rep.genus = (2 - 2 * d + excess) / 2;
  return rep;
}

PredictedMonodromy predicted_monodromy(int n) {
  if (n < 10 || n % 2 != 0)
    throw invalid_parameter("closed-form action needs even n >= 10");
  const int half = n / 2;
  const int d = 3 * (half - 1);
  auto posA = [&](int i) { return i; };                 // 1..n/2
  auto posB = [&](int i) { return half + i - 1; };      // i in 2..n/2
  auto posC = [&](int i) { return n - 1 + i; };         // i in 1..n/2-2

  PredictedMonodromy pm;
  {
    std::vector<int> img(d);
    for (int i = 1; i <= half; ++i) img[posA(i) - 1] = posA(i == 1 ? half : i - 1);
    for (int i = 2; i <= half; ++i) img[posB(i) - 1] = posB(i == 2 ? half : i - 1);
    for (int i = 1; i <= half - 2; ++i) img[posC(i) - 1] = posC(i == 1 ? half - 2 : i - 1);
    pm.gamma1 = Permutation::from_images(img);
  }
  {
    std::vector<int> img(d);
    for (int k = 1; k <= d; ++k) img[k - 1] = k;
    auto cycle = [&](const std::vector<int>& pts) {
      for (size_t i = 0; i < pts.size(); ++i) img[pts[i] - 1] = pts[(i + 1) % pts.size()];
    };
    cycle({posA(half - 2), posB(half), posB(half - 1), posA(half), posC(half - 2)});
    for (int j = 1; j <= half - 3; ++j) cycle({posA(j), posC(half - 2 - j)});
    for (int j = 2; j <= half - 2; ++j) {
      int k = half - j;
      if (j < k) cycle({posB(j), posB(k)});
    }
    pm.gamma2 = Permutation::from_images(img);
  }
  {
    std::vector<int> img(d);
    for (int k = 1; k <= d; ++k) img[k - 1] = k;
    auto cycle = [&](const std::vector<int>& pts) {
      for (size_t i = 0; i < pts.size(); ++i) img[pts[i] - 1] = pts[(i + 1) % pts.size()];
    };
    cycle({posA(half - 1), posA(half - 2), posB(half - 1)});
    for (int j = 1; j <= half - 4; ++j) cycle({posC(j), posA(half - 3 - j)});
    cycle({posC(half - 3), posA(half)});
    cycle({posC(half - 2), posA(half - 3)});
    cycle({posB(half), posB(half - 2)});
    for (int j = 2; j <= half - 3; ++j) {
      int k = half - 1 - j;
      if (j < k) cycle({posB(j), posB(k)});
    }
    pm.gamma12 = Permutation::from_images(img);
  }
  return pm;
}

BraidOrbitReport braid_orbits(int n) {
  auto classes = enumerate_sni(n);
  BraidOrbitReport rep;
  rep.n = n;
  rep.class_count = static_cast<int>(classes.size());

  std::map<NielsenTuple, int> comp;
  int orbits = 0;
  for (const auto& [label, t] : classes) {
    NielsenTuple start = canonicalize(t);
    if (comp.count(start)) continue;
    ++orbits;
    std::queue<NielsenTuple> q;
    q.push(start);
    comp[start] = orbits;
    while (!q.empty()) {
      NielsenTuple cur = q.front();
      q.pop();
      for (int i = 1; i <= 3; ++i) {
        for (NielsenTuple next : {braid_act(cur, i), braid_act_inverse(cur, i)}) {
          if (!comp.count(next)) {
            comp[next] = orbits;
            q.push(next);
          }
        }
      }
    }
  }
  rep.reachable_count = static_cast<int>(comp.size());
  rep.orbit_count = orbits;
  return rep;
}

}  // namespace hurwitz
