#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

// Branch cycle description of the covers under study: degree n (even, >= 6),
// four branch points, and the fixed conjugacy classes
//   C_1 = (n-2)-cycles, C_2 = 3-cycles,
//   C_3 = involutions with two fixed points, C_4 = fixed-point-free involutions.
// A NielsenTuple is a 4-tuple (sigma_1..sigma_4) in these classes with
// sigma_1 sigma_2 sigma_3 sigma_4 = 1 generating the full symmetric group,
// considered up to simultaneous conjugation.
struct NielsenTuple {
  std::vector<Permutation> sigma;  // exactly four entries, equal degree
  int n() const { return sigma.at(0).degree(); }

  friend bool operator==(const NielsenTuple& a, const NielsenTuple& b) { return a.sigma == b.sigma; }
  friend bool operator<(const NielsenTuple& a, const NielsenTuple& b);
};

enum class Family { A, B, C };

struct ClassLabel {
  Family family;
  int index;

  std::string str() const;
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.family == b.family && a.index == b.index;
  }
  friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.index < b.index;
  }
};

// The four class cycle types for degree n, in tuple-coordinate order.
std::vector<std::vector<int>> class_cycle_types(int n);

// Splits an even-length cycle c into an ordered product c = sigma * tau
// (tau applied first) of two involutions anchored at the support point x:
// sigma pairs c^{1-i}(x) with c^i(x), tau pairs c^j(x) with c^{-j}(x).
// sigma has m/2 transpositions covering the support; tau has m/2 - 1 and
// fixes x and c^{m/2}(x). Distinct anchors x give distinct splittings except
// for x <-> c^{m/2}(x), so an m-cycle has exactly m/2 of them.
struct CycleSplit {
  Permutation sigma, tau;
};
CycleSplit even_cycle_split(const Permutation& c, int x);

// Representative tuple of the labeled class, fully validated.
NielsenTuple make_class(int n, const ClassLabel& label);

std::vector<ClassLabel> all_class_labels(int n);

// All 3(n/2 - 1) class representatives with their labels.
std::vector<std::pair<ClassLabel, NielsenTuple>> enumerate_sni(int n);

// Canonical form under simultaneous conjugation: conjugate the unique
// coordinate of type (n-2,1,1) to (1,...,n-2), then minimize the image
// tables lexicographically over that cycle's 2(n-2) element centralizer.
NielsenTuple canonicalize(const NielsenTuple& t);

// Independent oracle for n in {6, 8}: exhaustive enumeration over sigma_2
// and sigma_3 with sigma_1 pinned to (1,...,n-2), deduplicated by canonical
// form. Returns sorted canonical representatives.
std::vector<NielsenTuple> brute_force_sni(int n, bool generation_filter = true);

// Throws unless every NielsenTuple invariant holds (degree, classes,
// product one, generation).
void validate_tuple(const NielsenTuple& t);

bool product_is_identity(const NielsenTuple& t);

}  // namespace hurwitz
