#pragma once

#include <gmpxx.h>

#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

inline constexpr int kMaxStabilizerChainDegree = 24;

struct GroupOrderReport {
  mpz_class order;
  bool transitive = false;
  bool symmetric = false;
  bool alternating = false;
};

bool is_transitive(const std::vector<Permutation>& gens);

// Order of the generated subgroup of Sym(degree) via a stabilizer chain.
// Degrees above kMaxStabilizerChainDegree are rejected: the chain grows too
// costly there and nothing in this project needs it.
GroupOrderReport group_order(const std::vector<Permutation>& gens);

mpz_class factorial(int n);

}  // namespace hurwitz
