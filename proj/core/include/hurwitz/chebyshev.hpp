#pragma once

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Chebyshev polynomial of the first kind, T_k(cos t) = cos(k t), computed by
// the three term recurrence over Q.
Polynomial<Rational> chebyshev_T(int k);

}  // namespace hurwitz
