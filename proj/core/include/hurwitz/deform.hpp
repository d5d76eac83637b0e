#pragma once

#include <string>
#include <vector>

#include "hurwitz/cover_model.hpp"
#include "hurwitz/multipoly.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// The polynomial system cut out by the two defining identities. Unknowns are
// ordered alpha_0..alpha_{n/2-1}, beta0, beta1, gamma, delta_0..delta_{n-4},
// eta_0..eta_{n/2-2}, lambda (2n in total); the deformation parameter mu is
// adjoined as the final variable, and the second root of the lower quadratic
// is pinned to mu. Equation r is the X^r coefficient of the first residual
// for r < n and the X^{r-n} coefficient of the second for r >= n; the X^n
// coefficients cancel identically on both sides.
struct DeformationSystem {
  int n = 0;
  std::vector<MultiPoly> equations;        // 2n
  std::vector<std::string> unknown_names;  // 2n, mu excluded

  int unknown_count() const { return static_cast<int>(unknown_names.size()); }
  int mu_index() const { return unknown_count(); }

  // residuals at a point given as unknown values followed by the mu value
  std::vector<Rational> eval(const std::vector<Rational>& point) const;
};

DeformationSystem build_system(int n);

// One branch of solutions through the degenerate member, carried to the
// requested mu-adic precision. In the model, alpha_i has valuation at least
// n/2 - i, eta_l at least n/2 - 1 - l, lambda exactly n (once the precision
// can see it), and epsilon0 is exactly mu. Both residual polynomials vanish
// coefficientwise modulo mu^precision.
struct DeformationState {
  int n = 0;
  int precision = 0;
  CoverModel<TruncatedSeries> model;
};

// Newton iteration for the branch with initial data from
// initial_coefficients and chebyshev_factors. The unknowns are rescaled
// internally so that the Jacobian at mu = 0 becomes invertible; the
// certified order doubles each round, so the number of linear solves is
// logarithmic in the precision. Throws singular_jacobian carrying a kernel
// basis (in unknown order) if the constant Jacobian degenerates, and
// verification_failure if the final residuals do not vanish or the
// multiplier valuation is off.
DeformationState newton_lift(int n, int precision);

}  // namespace hurwitz
