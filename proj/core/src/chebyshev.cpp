#include "hurwitz/chebyshev.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

Polynomial<Rational> chebyshev_T(int k) {
  if (k < 0) throw invalid_parameter("chebyshev index must be nonnegative");
  Polynomial<Rational> prev(1);
  if (k == 0) return prev;
  Polynomial<Rational> cur = Polynomial<Rational>::variable();
  Polynomial<Rational> two_x = Polynomial<Rational>::monomial(1, Rational(2));
  for (int i = 1; i < k; ++i) {
    Polynomial<Rational> next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace hurwitz
