#pragma once

#include "hurwitz/cover_model.hpp"
#include "hurwitz/rational_function.hpp"

namespace hurwitz {

// Starting member on the upper half: x(X) = X^n / Q(X) with
//   Q = gamma (X^2 + beta1 X + beta0),
//   gamma = n(n-1)/2, beta1 = -2(n-2)/(n-1), beta0 = (n-2)/n,
// the unique such map with Q(1) = 1, Q'(1) = n, Q''(1) = n(n-1). Verifies
// that x - 1 vanishes to order exactly three at X = 1 with a squarefree
// cofactor, that the two finite poles are simple and distinct, and that the
// pole at infinity has order n - 2. Throws ramification_check_failed if any
// of these degenerate.
RationalFunction pade_degenerate(int n);

// Degenerate member on the lower half: y(Y) = (T_n(2Y - 1) + 1) / 2 with T_n
// the Chebyshev polynomial. Verifies that all n/2 roots of y are double and
// distinct, that y - 1 has simple roots at 0 and 1 and n/2 - 1 distinct
// double roots elsewhere, and that infinity is totally ramified.
RationalFunction chebyshev_degenerate(int n);

// Monic inner factors of the Chebyshev member, plus the leading coefficient
// of the multiplier:
//   y     = 2^{2n-2} a0^2            a0 = T_{n/2}(2Y - 1) / 2^{n-1}
//   y - 1 = 2^{2n-2} Y (Y-1) h0^2
//   lambda_lead = 1 / ((n-1)(n-2) 2^{2n-3})
struct ChebyshevFactors {
  Polynomial<Rational> a0;  // degree n/2
  Polynomial<Rational> h0;  // degree n/2 - 1
  Rational lambda_lead;
};
ChebyshevFactors chebyshev_factors(int n);

// Exact coefficients of the family member at the degenerate point: alpha,
// eta, epsilon0 and lambda all zero, (beta0, beta1, gamma) as in
// pade_degenerate, delta the exact quotient (X^n - Q) / (X-1)^3. Both
// residuals of the returned model vanish identically; nonzero_remainder
// propagates if the quotient is not exact.
CoverModel<Rational> initial_coefficients(int n);

}  // namespace hurwitz
