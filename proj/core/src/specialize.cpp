#include "hurwitz/specialize.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "hurwitz/descent.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/modp.hpp"
#include "hurwitz/sturm.hpp"

namespace hurwitz {

namespace {

Polynomial<Rational> at_value(const Polynomial<RationalFunction>& p, const Rational& t0) {
  std::vector<Rational> c(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(i).eval(t0);
  return Polynomial<Rational>(std::move(c));
}

bool is_squarefree(const Polynomial<Rational>& f) {
  return squarefree_part(f).degree() == f.degree();
}

}  // namespace

NormalizedModel<Rational> specialize_model(const NormalizedModel<RationalFunction>& m,
                                           const Rational& t0) {
  NormalizedModel<Rational> out;
  out.n = m.n;
  out.a = at_value(m.a, t0);
  out.beta0 = m.beta0.eval(t0);
  out.beta1 = m.beta1.eval(t0);
  out.gamma = m.gamma.eval(t0);
  out.b = at_value(m.b, t0);
  out.q0 = m.q0.eval(t0);
  out.q1 = m.q1.eval(t0);
  out.h = at_value(m.h, t0);
  out.lambda = m.lambda.eval(t0);
  return out;
}

Polynomial<Rational> fiber_polynomial(const NormalizedModel<RationalFunction>& m,
                                      const Rational& t0, const Rational& x0,
                                      bool check_squarefree) {
  NormalizedModel<Rational> s = specialize_model(m, t0);
  if (s.gamma.is_zero())
    throw parameter_at_pole("gamma vanishes at t0 = " + t0.str());
  if ((s.beta1 * s.beta1 - Rational(4) * s.beta0).is_zero())
    throw parameter_at_pole("pole quadratic degenerates at t0 = " + t0.str());

  Polynomial<Rational> f = s.s0() - Polynomial<Rational>(x0 * s.gamma) * s.quadratic();
  // s0 is monic of degree n and the subtracted part is quadratic, so the
  // degree never drops
  f = primitive_part(f);
  if (check_squarefree) {
    if (x0.is_zero() || x0 == Rational(1) || x0 == s.lambda)
      throw degenerate_fiber("x0 = " + x0.str() + " is a branch value");
    if (!is_squarefree(f))
      throw degenerate_fiber("repeated fiber root at x0 = " + x0.str());
  }
  return f;
}

IntervalProbe totally_real_probe(const NormalizedModel<RationalFunction>& m,
                                 const Rational& t0, const ProbeOptions& opt) {
  if (opt.count < 1) throw invalid_parameter("probe count must be positive");
  if (opt.max_denominator < 2) throw invalid_parameter("probe denominators need room");

  IntervalProbe out;
  out.h_value = m.lambda.eval(t0);
  if (out.h_value.sign() <= 0)
    throw empty_interval("H(t0) = " + out.h_value.str() +
                         (out.h_value.sign() < 0 ? " is negative" : " vanishes") +
                         "; try the other side of the degenerate value");
  if (out.h_value == Rational(1))
    throw empty_interval("H(t0) collides with the branch value 1");
  out.upper = std::min(out.h_value, Rational(1));
  out.branch_order_nominal = out.h_value < Rational(1);

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> den_pick(2, opt.max_denominator);
  std::set<Rational> seen;
  std::vector<ProbeResult> probes;
  int attempts = 0, cap = 40 * opt.count + 100;
  while (static_cast<int>(probes.size()) < opt.count) {
    if (++attempts > cap)
      throw degenerate_fiber("could not sample enough squarefree interior fibers");
    int den = den_pick(rng);
    int num = std::uniform_int_distribution<int>(1, den - 1)(rng);
    Rational x0 = out.upper * Rational(num, den);
    if (!seen.insert(x0).second) continue;
    ProbeResult pr;
    pr.x0 = x0;
    try {
      pr.fiber = fiber_polynomial(m, t0, x0, true);
    } catch (const degenerate_fiber&) {
      continue;
    }
    pr.distinct = true;
    pr.interior = true;
    pr.real_root_count = sturm_count(pr.fiber);
    probes.push_back(std::move(pr));
  }
  for (long c : {2L, -1L}) {
    ProbeResult pr;
    pr.x0 = Rational(c);
    pr.fiber = fiber_polynomial(m, t0, pr.x0, false);
    pr.distinct = is_squarefree(pr.fiber);
    pr.interior = false;
    pr.real_root_count = sturm_count(pr.fiber);
    probes.push_back(std::move(pr));
  }
  std::sort(probes.begin(), probes.end(),
            [](const ProbeResult& a, const ProbeResult& b) { return a.x0 < b.x0; });

  out.interval_totally_real = true;
  out.controls_separate = true;
  for (const auto& pr : probes) {
    if (pr.interior)
      out.interval_totally_real &= pr.distinct && pr.real_root_count == m.n;
    else
      out.controls_separate &= pr.real_root_count < m.n;
  }
  out.probes = std::move(probes);
  return out;
}

std::string str(SnVerdict v) {
  switch (v) {
    case SnVerdict::proved_desk_scale: return "proved_desk_scale";
    case SnVerdict::strong_evidence: return "strong_evidence";
    default: return "inconclusive";
  }
}

void classify_evidence(EvidenceReport& rep) {
  rep.irreducible_witness.reset();
  rep.has_long_cycle = rep.has_transposition = rep.has_odd_pattern = false;
  const int n = rep.n;
  for (const auto& pp : rep.patterns) {
    const auto& d = pp.degrees;
    if (d.size() == 1 && d[0] == n && !rep.irreducible_witness)
      rep.irreducible_witness = pp.p;
    int twos = 0;
    bool rest_odd = true;
    for (int part : d) {
      if (part == n - 1 || (2 * part > n && part < n && is_small_prime(part)))
        rep.has_long_cycle = true;
      if (part == 2)
        ++twos;
      else if (part % 2 == 0)
        rest_odd = false;
    }
    // one part 2 and every other part odd: raising Frobenius to the odd lcm
    // of the rest leaves exactly the 2-cycle
    if (twos == 1 && rest_odd) rep.has_transposition = true;
    // Frobenius sign: (-1)^(n - #parts); any odd one rules the alternating
    // group out
    if ((n - static_cast<int>(d.size())) % 2 == 1) rep.has_odd_pattern = true;
  }
  if (rep.irreducible_witness && rep.has_long_cycle && rep.has_transposition)
    rep.verdict = SnVerdict::proved_desk_scale;
  else if (rep.irreducible_witness && rep.has_odd_pattern &&
           static_cast<int>(rep.patterns.size()) >= 20)
    rep.verdict = SnVerdict::strong_evidence;
  else
    rep.verdict = SnVerdict::inconclusive;
}

EvidenceReport sn_evidence(const Polynomial<Rational>& f, const std::vector<long>& primes) {
  if (f.degree() < 1) throw invalid_parameter("evidence needs a nonconstant polynomial");
  if (!is_squarefree(f)) throw invalid_parameter("evidence needs a squarefree polynomial");
  EvidenceReport rep;
  rep.n = f.degree();
  for (long p : primes) {
    try {
      rep.patterns.push_back({p, modp_factor_degrees(f, p)});
    } catch (const bad_reduction_prime&) {
      rep.bad_primes.push_back(p);
    }
  }
  if (rep.patterns.empty())
    throw all_primes_bad("no supplied prime yields a valid reduction");
  std::sort(rep.patterns.begin(), rep.patterns.end(),
            [](const PrimePattern& a, const PrimePattern& b) { return a.p < b.p; });
  std::sort(rep.bad_primes.begin(), rep.bad_primes.end());
  classify_evidence(rep);
  return rep;
}

AnCheckReport an_specialization_check(int n, const Rational& t0) {
  if (n < 6 || n % 2 != 0) throw invalid_parameter("degree must be even and at least 6");
  AnCheckReport rep;
  rep.n = n;
  rep.t0 = t0;
  NielsenTuple tuple = make_class(n, find_totally_real_classes(n).front());
  AnLiftReport lift = an_product(tuple);
  rep.parities = lift.parities;
  rep.quadratic_branch_points = lift.quadratic_branch_points;
  rep.expected_positions =
      n % 4 == 0 ? std::vector<int>{1, 3} : std::vector<int>{1, 4};
  rep.positions_match = rep.quadratic_branch_points == rep.expected_positions;
  rep.product_one = lift.product_one;
  rep.transitive = lift.transitive;
  rep.all_lifts_even = lift.all_lifts_even;
  NielsenTuple lifted;
  lifted.sigma = lift.lifted;
  DescentVerdict dv = descent_check(lifted);
  rep.defined_over_R = dv.defined_over_R;
  rep.totally_real = dv.totally_real;
  return rep;
}

Rational generator_base_value(const PipelineResult& pipe) {
  const auto& m = pipe.normalization.model;
  const std::string& g = pipe.reconstruction.generator;
  if (g == "beta1") return m.beta1.coefficient(0);
  if (g == "beta0") return m.beta0.coefficient(0);
  if (g == "gamma") return m.gamma.coefficient(0);
  if (g == "b_top") return m.b.coeff(m.n - 4).coefficient(0);
  throw invalid_parameter("unknown generator coordinate " + g);
}

SpecializationReport specialize_family(const PipelineResult& pipe,
                                       const SpecializeOptions& opt) {
  if (!pipe.report.ok)
    throw verification_failure("refusing to specialize an uncertified family");
  const NormalizedModel<RationalFunction>& model = pipe.reconstruction.model;

  SpecializationReport rep;
  rep.n = model.n;
  rep.degenerate_t = generator_base_value(pipe);

  if (opt.t0) {
    rep.t0 = *opt.t0;
    rep.interval = totally_real_probe(model, rep.t0, opt.probe);
  } else {
    bool found = false;
    for (int k = 1; k <= opt.max_search_steps && !found; ++k) {
      for (int side : {-1, +1}) {
        ParameterSearchStep step;
        step.t0 = rep.degenerate_t + Rational(side * k, 10);
        try {
          IntervalProbe probe = totally_real_probe(model, step.t0, opt.probe);
          step.h = probe.h_value;
          if (probe.interval_totally_real && probe.controls_separate) {
            step.outcome = "selected";
            rep.t0 = step.t0;
            rep.interval = std::move(probe);
            found = true;
          } else {
            step.outcome = "probes failed";
          }
        } catch (const empty_interval&) {
          step.outcome = "interval empty";
        } catch (const parameter_at_pole&) {
          step.outcome = "pole";
        } catch (const degenerate_fiber&) {
          step.outcome = "degenerate member";
        }
        rep.search.push_back(std::move(step));
        if (found) break;
      }
    }
    if (!found)
      throw empty_interval("no qualifying parameter within " +
                           std::to_string(opt.max_search_steps) + " tenths of " +
                           rep.degenerate_t.str());
  }

  std::vector<long> primes = opt.primes.empty() ? odd_primes_below(200) : opt.primes;
  bool have_baseline = false;
  int usable_fibers = 0;
  for (const auto& pr : rep.interval.probes) {
    if (!pr.interior || !pr.distinct) continue;
    EvidenceReport ev;
    try {
      ev = sn_evidence(pr.fiber, primes);
    } catch (const all_primes_bad&) {
      continue;
    }
    ++usable_fibers;
    if (ev.irreducible_witness) {
      rep.evidence = std::move(ev);
      rep.certified_x0 = pr.x0;
      break;
    }
    if (!have_baseline) {
      rep.evidence = std::move(ev);
      have_baseline = true;
    }
  }
  if (usable_fibers == 0)
    throw all_primes_bad("every interior fiber rejected every supplied prime");

  rep.ok = rep.interval.interval_totally_real && rep.interval.controls_separate &&
           rep.certified_x0.has_value();
  return rep;
}

}  // namespace hurwitz
