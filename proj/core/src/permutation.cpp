#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

Permutation::Permutation(int degree) {
  if (degree < 1) throw bad_permutation("degree must be at least one");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& one_based) {
  int n = static_cast<int>(one_based.size());
  if (n < 1) throw bad_permutation("empty image table");
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int v = one_based[i];
    if (v < 1 || v > n || seen[v - 1]) throw bad_permutation("image table is not a bijection");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> seen(degree, false);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree) throw point_not_in_support("cycle entry out of range");
      if (seen[a - 1]) throw bad_permutation("cycles are not disjoint");
      seen[a - 1] = true;
      p.img_[a - 1] = b - 1;
    }
  }
  return p;
}

Permutation Permutation::single_cycle(int degree, const std::vector<int>& cycle) {
  return from_cycles(degree, {cycle});
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a == b) throw bad_permutation("transposition needs two distinct points");
  return from_cycles(degree, {{a, b}});
}

Permutation Permutation::parse(int degree, const std::string& s) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw bad_permutation("expected '(' in cycle notation: " + s);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      if (j == i) throw bad_permutation("expected a point in cycle notation: " + s);
      cyc.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
      skip_ws();
      if (i < s.size() && (s[i] == ',' || s[i] == ' ')) { ++i; skip_ws(); }
    }
    if (i >= s.size()) throw bad_permutation("unterminated cycle: " + s);
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw degree_mismatch();
  Permutation r(p.degree());
  for (int i = 0; i < p.degree(); ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return compose(compose(g, *this), g.inverse());
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed_points) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = img_[j];
    } while (j != i);
    if (cyc.size() > 1 || include_fixed_points) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles(true)) type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

int Permutation::parity() const {
  int transpositions = 0;
  for (const auto& c : cycles(false)) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? +1 : -1;
}

int Permutation::order() const {
  long o = 1;
  for (const auto& c : cycles(true)) o = std::lcm(o, static_cast<long>(c.size()));
  return static_cast<int>(o);
}

std::vector<int> Permutation::images() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
  return v;
}

std::string Permutation::cycle_string() const {
  auto cy = cycles(false);
  if (cy.empty()) return "()";
  std::string out;
  for (const auto& c : cy) {
    out += "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace hurwitz
