#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct LinearSolveResult {
  SolveStatus status = SolveStatus::kInconsistent;
  int rank = 0;
  std::vector<int> pivot_columns;
  // a solution (the unique one, or the particular one with free variables
  // set to zero); empty when inconsistent
  std::vector<Rational> solution;
  // basis of the homogeneous solution space; nonempty only when the system
  // is underdetermined
  std::vector<std::vector<Rational>> nullspace;
};

// Exact solve of A x = b over Q by fraction free (Bareiss) elimination on a
// row-wise integer rescaling of the augmented matrix.
LinearSolveResult linear_solve_exact(const std::vector<std::vector<Rational>>& A,
                               const std::vector<Rational>& b);

// basis of { x : A x = 0 }
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& A);

}  // namespace hurwitz
