#pragma once

#include <string>

#include "hurwitz/cover_model.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/rational_function.hpp"

namespace hurwitz {

std::string latex(const Rational& r);

// Integer-cleared fraction of polynomials in var, \frac{...}{...} unless the
// denominator reduces to one.
std::string latex(const RationalFunction& f, const std::string& var = "T");

// Polynomial in var with coefficients in Q(par), highest power first.
std::string latex(const Polynomial<RationalFunction>& p, const std::string& var = "X",
                  const std::string& par = "T");

// Multiplicity-factored display c (q_1)^{e_1}.../(r_1)^{f_1}... with integer
// primitive factors from the squarefree decomposition.
std::string latex_factored(const RationalFunction& f, const std::string& var = "T");

// The three displayed forms of the family member (the map, map - 1 and
// map - multiplier) as an aligned block, followed by the factored multiplier.
std::string latex_model(const NormalizedModel<RationalFunction>& m);

}  // namespace hurwitz
