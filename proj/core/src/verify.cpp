#include "hurwitz/verify.hpp"

#include <algorithm>
#include <utility>

#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

std::vector<int> pattern_of(const Polynomial<Rational>& g, int map_degree) {
  std::vector<int> out;
  auto parts = yun_decomposition(g);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int mult = static_cast<int>(i) + 1;
    for (int r = 0; r < parts[i].degree(); ++r) out.push_back(mult);
  }
  int at_infinity = map_degree - g.degree();
  if (at_infinity > 0) out.push_back(at_infinity);
  std::sort(out.rbegin(), out.rend());
  int total = 0;
  for (int m : out) total += m;
  if (total != map_degree)
    throw ramification_check_failed("fiber multiplicities do not sum to the map degree");
  return out;
}

using PQ = Polynomial<RationalFunction>;

Polynomial<Rational> specialize(const PQ& p, const Rational& t0) {
  std::vector<Rational> c(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(i).eval(t0);
  return Polynomial<Rational>(std::move(c));
}

// Coprimality over Q(T), decided by specializing T. A specialization that
// keeps both leading coefficients alive can only enlarge the gcd, so a
// constant specialized gcd is a certificate; a remainder sequence over the
// function field itself (expensive) is kept as the fallback.
bool gcd_is_constant(const PQ& p, const PQ& q) {
  int tried = 0;
  for (long k = 0; tried < 6 && k < 64; ++k) {
    Rational t0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    try {
      Polynomial<Rational> ps = specialize(p, t0);
      Polynomial<Rational> qs = specialize(q, t0);
      if (ps.degree() != p.degree() || qs.degree() != q.degree()) continue;
      ++tried;
      if (gcd(ps, qs).degree() == 0) return true;
    } catch (const parameter_at_pole&) {
    }
  }
  return gcd(p, q).degree() == 0;
}

bool separable(const PQ& p) { return gcd_is_constant(p, p.derivative()); }

bool coprime(const PQ& p, const PQ& q) { return gcd_is_constant(p, q); }

}  // namespace

std::vector<int> fiber_multiplicities(const RationalFunction& f, const Rational& value) {
  int d = f.map_degree();
  if (d <= 0) throw invalid_parameter("fiber of a constant map");
  Polynomial<Rational> g = f.numerator() - f.denominator() * Polynomial<Rational>(value);
  return pattern_of(g, d);
}

std::vector<int> fiber_multiplicities_at_infinity(const RationalFunction& f) {
  int d = f.map_degree();
  if (d <= 0) throw invalid_parameter("fiber of a constant map");
  return pattern_of(f.denominator(), d);
}

VerificationReport verify_model(const NormalizedModel<RationalFunction>& m) {
  VerificationReport rep;
  rep.n = m.n;

  rep.identities_hold =
      m.residual_at_one().is_zero() && m.residual_at_lambda().is_zero();

  const PQ& a = m.a;
  const PQ& b = m.b;
  const PQ& h = m.h;
  PQ upper = m.quadratic();
  PQ lower = m.lower_quadratic();
  rep.factors_separable = separable(a) && separable(b) && separable(h) &&
                          separable(upper) && separable(lower);

  // x = a^2 / (gamma q) must be reduced of degree n, the triple contact at
  // X = 1 exact, and the double roots over lambda exactly the roots of h.
  RationalFunction b_at_one = b.eval(RationalFunction(Rational(1)));
  rep.fibers_reduced = coprime(a, upper) && coprime(h, lower) &&
                       !b_at_one.is_zero() && !m.gamma.is_zero() &&
                       !m.lambda.is_zero() && m.lambda.map_degree() > 0;

  rep.hn_degree = m.lambda.map_degree();
  rep.expected = expected_ramification(m.n);

  if (rep.hn_degree > 0) {
    rep.patterns[0] = fiber_multiplicities(m.lambda, Rational(0));
    rep.patterns[1] = fiber_multiplicities(m.lambda, Rational(1));
    rep.patterns[2] = fiber_multiplicities_at_infinity(m.lambda);
  }

  // Match the three patterns against the three expected rows, preferring the
  // assignment (z3, z2, z1); equal rows can make others tie with it.
  const std::array<std::array<int, 3>, 6> orders = {{{2, 1, 0},
                                                     {0, 1, 2},
                                                     {1, 0, 2},
                                                     {2, 0, 1},
                                                     {0, 2, 1},
                                                     {1, 2, 0}}};
  for (const auto& ord : orders) {
    bool all = true;
    for (int i = 0; i < 3 && all; ++i) all = rep.patterns[i] == rep.expected[ord[i]];
    if (all) {
      rep.assignment = {ord[0], ord[1], ord[2]};
      rep.patterns_match = true;
      break;
    }
  }
  rep.labeling_z3_z2_z1 =
      rep.patterns_match && rep.assignment == std::array<int, 3>{{2, 1, 0}};

  rep.ok = rep.identities_hold && rep.factors_separable && rep.fibers_reduced &&
           rep.hn_degree == 3 * (m.n / 2 - 1) && rep.patterns_match;
  return rep;
}

void require_certified(const VerificationReport& rep) {
  if (!rep.identities_hold)
    throw identity_failed("an algebraic identity of the family fails over Q(T)");
  if (!rep.factors_separable || !rep.fibers_reduced)
    throw identity_failed("a separability or coprimality side condition fails");
  if (rep.hn_degree != 3 * (rep.n / 2 - 1))
    throw ramification_mismatch("lambda has the wrong degree as a map of curves");
  if (!rep.patterns_match)
    throw ramification_mismatch("branch multiplicities disagree with the expected rows");
}

PipelineResult run_pipeline(int n, int precision) {
  if (n < 6 || n % 2 != 0) throw invalid_parameter("degree must be even and at least 6");
  int prec = precision > 0 ? precision : (n == 6 ? 64 : 128);
  for (int attempt = 0;; ++attempt) {
    PipelineResult out;
    out.state = newton_lift(n, prec);
    out.normalization = normalize(out.state);
    out.lambda_series_valuation = out.state.model.lambda.valuation();
    try {
      out.reconstruction = reconstruct(out.normalization);
      out.report = verify_model(out.reconstruction.model);
      if (out.report.ok) return out;
      if (attempt >= 2) return out;  // certified red: hand the report back
    } catch (const insufficient_precision&) {
      if (attempt >= 2) throw;
    }
    prec *= 2;
  }
}

}  // namespace hurwitz
