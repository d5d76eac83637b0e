#include "hurwitz/degenerate.hpp"

#include "hurwitz/chebyshev.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

using Poly = Polynomial<Rational>;

void check_n(int n) {
  if (n < 6 || n % 2 != 0)
    throw invalid_parameter("family degree must be even and at least 6, got " +
                            std::to_string(n));
}

Poly cube_at_one() {
  Poly shift{std::vector<Rational>{Rational(-1), Rational(1)}};
  return shift * shift * shift;
}

struct PadeData {
  Rational beta0, beta1, gamma;
  Poly q;       // gamma (X^2 + beta1 X + beta0)
  Poly cofactor;  // (X^n - q) / (X-1)^3, monic of degree n-3
};

PadeData pade_data(int n) {
  PadeData d;
  d.gamma = Rational(static_cast<long>(n) * (n - 1), 2);
  d.beta1 = Rational(-2 * static_cast<long>(n - 2), n - 1);
  d.beta0 = Rational(n - 2, n);
  d.q = d.gamma * Poly{std::vector<Rational>{d.beta0, d.beta1, Rational(1)}};
  Poly diff = Poly::monomial(n) - d.q;
  d.cofactor = exact_div(diff, cube_at_one());
  return d;
}

bool squarefree(const Poly& p) { return gcd(p, p.derivative()).degree() == 0; }

}  // namespace

RationalFunction pade_degenerate(int n) {
  check_n(n);
  PadeData d = pade_data(n);
  if (d.q.eval(Rational(1)) != Rational(1) ||
      d.q.derivative().eval(Rational(1)) != Rational(n) ||
      d.q.derivative().derivative().eval(Rational(1)) !=
          Rational(static_cast<long>(n) * (n - 1)))
    throw ramification_check_failed("normalization at X=1 violated");
  if (d.cofactor.eval(Rational(1)).is_zero())
    throw ramification_check_failed("contact order at X=1 exceeds three");
  if (!squarefree(d.cofactor))
    throw ramification_check_failed("extra fiber collision above x=1");
  // simple distinct finite poles away from X=0, pole order n-2 at infinity
  if ((d.beta1 * d.beta1 - 4 * d.beta0).is_zero() || d.beta0.is_zero())
    throw ramification_check_failed("pole pattern is not (n-2,1,1)");
  return RationalFunction(Poly::monomial(n), d.q);
}

ChebyshevFactors chebyshev_factors(int n) {
  check_n(n);
  Poly sub{std::vector<Rational>{Rational(-1), Rational(2)}};  // 2Y - 1
  Rational scale_a(mpz_class(1), mpz_class(1) << (n - 1));
  Rational scale_g(mpz_class(1), mpz_class(1) << (2 * n - 2));
  ChebyshevFactors f;
  f.a0 = scale_a * chebyshev_T(n / 2).compose(sub);
  Poly g = Rational(1, 2) * (chebyshev_T(n).compose(sub) + Poly(1));
  Poly inner = scale_g * (g - Poly(1));
  Poly y_y1{std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}};
  f.h0 = monic_sqrt(exact_div(inner, y_y1));
  mpz_class den = mpz_class(static_cast<long>(n - 1) * (n - 2)) << (2 * n - 3);
  f.lambda_lead = Rational(mpz_class(1), den);
  return f;
}

RationalFunction chebyshev_degenerate(int n) {
  check_n(n);
  Poly sub{std::vector<Rational>{Rational(-1), Rational(2)}};
  Poly g = Rational(1, 2) * (chebyshev_T(n).compose(sub) + Poly(1));
  ChebyshevFactors f = chebyshev_factors(n);
  Rational c(mpz_class(mpz_class(1) << (2 * n - 2)));
  if (g != c * (f.a0 * f.a0) || !squarefree(f.a0))
    throw ramification_check_failed("pattern above y=0 is not (2^{n/2})");
  Poly y_y1{std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}};
  if (g - Poly(1) != c * (y_y1 * (f.h0 * f.h0)) || !squarefree(f.h0) ||
      f.h0.eval(Rational(0)).is_zero() || f.h0.eval(Rational(1)).is_zero())
    throw ramification_check_failed("pattern above y=1 is not (2^{(n-2)/2},1,1)");
  if (gcd(f.a0, f.h0).degree() != 0)
    throw ramification_check_failed("fibers above y=0 and y=1 collide");
  if (g.degree() != n)
    throw ramification_check_failed("map degree is not n");
  return RationalFunction(g);
}

CoverModel<Rational> initial_coefficients(int n) {
  check_n(n);
  PadeData d = pade_data(n);
  CoverModel<Rational> m;
  m.n = n;
  m.alpha.assign(n / 2, Rational(0));
  m.beta0 = d.beta0;
  m.beta1 = d.beta1;
  m.gamma = d.gamma;
  m.delta.assign(d.cofactor.coeffs().begin(), d.cofactor.coeffs().end() - 1);
  m.epsilon0 = Rational(0);
  m.eta.assign(n / 2 - 1, Rational(0));
  m.lambda = Rational(0);
  if (!m.residual_at_one().is_zero() || !m.residual_at_lambda().is_zero())
    throw verification_failure("degenerate member residuals do not vanish");
  return m;
}

}  // namespace hurwitz
