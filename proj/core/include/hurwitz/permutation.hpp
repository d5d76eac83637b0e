#pragma once

#include <string>
#include <vector>

#include "hurwitz/error.hpp"

namespace hurwitz {

// Permutation of {1, ..., degree}. The degree is part of the value: mixing
// degrees in products or comparisons is an error rather than an implicit
// embedding. Stored as the image table in 0-based form.
class Permutation {
 public:
  explicit Permutation(int degree);  // identity
  static Permutation from_images(const std::vector<int>& one_based_images);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation single_cycle(int degree, const std::vector<int>& cycle);
  static Permutation transposition(int degree, int a, int b);
  // parses disjoint cycle notation such as "(1,2,3)(4,5)" or "()"
  static Permutation parse(int degree, const std::string& s);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const {
    if (x < 1 || x > degree()) throw point_not_in_support("point out of range");
    return img_[x - 1] + 1;
  }
  int operator()(int x) const { return apply(x); }

  bool is_identity() const;
  Permutation inverse() const;
  // (p * q)(x) = p(q(x)): q acts first
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

  // g . this . g^{-1}
  Permutation conjugated_by(const Permutation& g) const;

  std::vector<std::vector<int>> cycles(bool include_fixed_points = false) const;
  std::vector<int> cycle_type() const;  // descending, fixed points included
  int parity() const;                   // +1 even, -1 odd
  int order() const;

  std::vector<int> images() const;  // 1-based
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw degree_mismatch();
    return a.img_ < b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace hurwitz
