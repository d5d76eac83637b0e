#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

// Verdict of the real-descent criterion for a 4-tuple over branch points in
// the configuration (complex pair, real, real): the cover descends to R iff
// some involution tau intertwines the tuple with its mirror image, and the
// fiber over the real test segment is totally real iff tau is the identity.
struct DescentVerdict {
  bool defined_over_R = false;
  std::optional<Permutation> tau;
  bool totally_real = false;
};

// The intertwining relations pin tau = sigma_4^{-2}; this checks that
// candidate against all four relations. Works for any 4-tuple with product
// one, including lifted ones of doubled degree.
DescentVerdict descent_check(const NielsenTuple& t);

// Labels of the classes whose fibers are totally real; for this family
// exactly one per degree, A with index n/2 - 1.
std::vector<ClassLabel> find_totally_real_classes(int n);

// Lift of a tuple to degree 2n via the parity double cover: points (x, s)
// with s in {1, 2} encoded as x + n(s-1); odd coordinates swap the sheets.
struct AnLiftReport {
  std::vector<Permutation> lifted;  // four permutations of degree 2n
  std::vector<int> parities;        // +1 / -1 of the original coordinates
  // 1-based positions of the two odd coordinates: the branch points whose
  // loops generate the quadratic subcover
  std::vector<int> quadratic_branch_points;
  bool product_one = false;
  bool transitive = false;
  bool all_lifts_even = false;
  // group order check runs only when 2n fits under the stabilizer cap
  bool order_checked = false;
  mpz_class order;  // expected n! (the parity extension of S_n)
};

AnLiftReport an_product(const NielsenTuple& t);

}  // namespace hurwitz
