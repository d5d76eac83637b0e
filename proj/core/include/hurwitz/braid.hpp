#pragma once

#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

// Right action of the braid generator Q_i on 4-tuples:
// (..., sigma_i, sigma_{i+1}, ...) -> (..., sigma_i sigma_{i+1} sigma_i^{-1}, sigma_i, ...).
// Words act left to right. The canonicalized variants return class
// representatives; the raw variants the literal tuple.
NielsenTuple braid_act_raw(const NielsenTuple& t, int i);
NielsenTuple braid_act_inverse_raw(const NielsenTuple& t, int i);
NielsenTuple braid_act(const NielsenTuple& t, int i);
NielsenTuple braid_act_inverse(const NielsenTuple& t, int i);

// word entries: +i for Q_i, -i for Q_i^{-1}, applied left to right
NielsenTuple braid_word(const NielsenTuple& t, const std::vector<int>& word);

struct MonodromyReport {
  int n = 0;
  int degree = 0;  // 3(n/2 - 1)
  std::vector<ClassLabel> labels;
  // actions on the class list (1-based label positions) of the three loops
  // around the finite branch points: gamma_1 = Q_1^2, gamma_2 = Q_2^2, and
  // the composite loop, stored as gamma1 o gamma2 (the braid word Q_1^2 Q_2^2
  // acts by the conjugate permutation gamma2 o gamma1; same cycle type)
  Permutation gamma1{1}, gamma2{1}, gamma12{1};
  std::vector<std::vector<int>> cycle_types;  // of gamma1, gamma2, gamma12
  int orbit_count = 0;
  int genus = 0;
  // the conjugate word Q_2^{-1} Q_3^2 Q_2 acts as the inverse of Q_1^2 Q_2^2
  bool gamma3_consistent = false;
  bool matches_expected = false;  // cycle types agree with expected_ramification
};

MonodromyReport gamma_monodromy(int n);

// Table of ramification types over the three finite branch points of the
// degree 3(n/2-1) cover, as partitions sorted descending.
std::vector<std::vector<int>> expected_ramification(int n);

// Closed-form index description of the three actions, defined for n >= 10
// (the subscript arithmetic degenerates below that).
struct PredictedMonodromy {
  Permutation gamma1{1}, gamma2{1}, gamma12{1};
};
PredictedMonodromy predicted_monodromy(int n);

struct BraidOrbitReport {
  int n = 0;
  int class_count = 0;      // strict classes among the reachable tuples
  int reachable_count = 0;  // all canonical tuples reachable from them
  int orbit_count = 0;
};

// Orbit structure of <Q_1, Q_2, Q_3> on the classes, by breadth-first
// closure from the class representatives.
BraidOrbitReport braid_orbits(int n);

}  // namespace hurwitz
