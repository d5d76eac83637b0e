#pragma once

#include <vector>

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Degrees (with multiplicity, ascending) of the irreducible factors of f
// modulo p, computed by distinct degree factorization. Throws
// bad_reduction_prime when p divides a coefficient denominator or the leading
// coefficient, or when f mod p is not squarefree; such primes carry no usable
// factorization pattern.
std::vector<int> modp_factor_degrees(const Polynomial<Rational>& f, long p);

bool is_small_prime(long p);

// odd primes in [3, bound)
std::vector<long> odd_primes_below(long bound);

}  // namespace hurwitz
