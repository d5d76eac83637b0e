#pragma once

#include <optional>
#include <vector>

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Sturm chain of the squarefree part of p (integer rescaled, signs preserved)
std::vector<Polynomial<Rational>> sturm_chain(const Polynomial<Rational>& p);

// Number of distinct real roots of p in the half open interval (a, b], with
// a missing bound meaning the corresponding infinity.
int sturm_count(const Polynomial<Rational>& p,
                     const std::optional<Rational>& a = std::nullopt,
                     const std::optional<Rational>& b = std::nullopt);

int sign_variations_at(const std::vector<Polynomial<Rational>>& chain,
                       const std::optional<Rational>& x, int infinity_sign = +1);

}  // namespace hurwitz
