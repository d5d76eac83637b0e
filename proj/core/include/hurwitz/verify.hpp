#pragma once

#include <array>
#include <vector>

#include "hurwitz/algebraize.hpp"
#include "hurwitz/deform.hpp"
#include "hurwitz/rational_function.hpp"

namespace hurwitz {

// Multiplicities in the fiber of f over a finite value, descending, with the
// point at X = infinity included when it maps there. The entries always sum
// to map_degree(). Throws invalid_parameter for a constant map.
std::vector<int> fiber_multiplicities(const RationalFunction& f, const Rational& value);
std::vector<int> fiber_multiplicities_at_infinity(const RationalFunction& f);

struct VerificationReport {
  int n = 0;
  bool identities_hold = false;    // both defining identities, exact in Q(T)[X]
  bool factors_separable = false;  // a, b, h and the two quadratics squarefree
  bool fibers_reduced = false;     // contact orders are exact (coprimality side conditions)
  int hn_degree = 0;               // degree of lambda as a map P1 -> P1; expect 3(n/2 - 1)
  // multiplicity patterns of the lambda map over the values 0, 1 and infinity
  std::array<std::vector<int>, 3> patterns;
  std::vector<std::vector<int>> expected;  // rows z1, z2, z3 of expected_ramification(n)
  std::array<int, 3> assignment{{-1, -1, -1}};  // expected row matched by each pattern
  bool labeling_z3_z2_z1 = false;  // patterns over (0, 1, inf) are rows (z3, z2, z1)
  bool patterns_match = false;     // some row assignment matches all three patterns
  bool ok = false;
};

// Exact certification of a reconstructed family: the two algebraic identities
// over Q(T), separability and coprimality of the fiber sections (so the cover
// has the stated ramification at every branch point), and the branch
// multiplicities of the degree 3(n/2 - 1) map lambda over 0, 1, infinity.
VerificationReport verify_model(const NormalizedModel<RationalFunction>& m);

// Throws identity_failed or ramification_mismatch when the report is not
// fully green; used where a certification failure must abort.
void require_certified(const VerificationReport& report);

struct PipelineResult {
  DeformationState state;
  SeriesNormalization normalization;
  ReconstructionResult reconstruction;
  VerificationReport report;
  int lambda_series_valuation = 0;  // mu-adic valuation of lambda in the lift; expect n
};

// Full chain: lift, normalize, reconstruct, certify. Doubles the carried
// precision (up to three attempts) when reconstruction runs out of orders or
// certification rejects a fit. precision 0 picks a default that covers n <= 12.
PipelineResult run_pipeline(int n, int precision = 0);

}  // namespace hurwitz
