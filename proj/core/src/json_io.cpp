#include "hurwitz/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

#include "hurwitz/degenerate.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/modp.hpp"
#include "hurwitz/sturm.hpp"

namespace hurwitz {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "hurwitz-covers/1";

json root() {
  json j;
  j["schema"] = kSchema;
  return j;
}

json jr(const Rational& r) { return r.str(); }

json jpoly(const Polynomial<Rational>& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(jr(p.coeff(i)));
  return a;
}

json jvec(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(jr(r));
  return a;
}

json jrf(const RationalFunction& f) {
  return json{{"num", jpoly(f.numerator())}, {"den", jpoly(f.denominator())}};
}

json jrfpoly(const Polynomial<RationalFunction>& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(jrf(p.coeff(i)));
  return a;
}

json jseries(const TruncatedSeries& s, int cap) {
  json out;
  json c = json::array();
  if (s.exact()) {
    out["precision"] = "exact";
    int last = 0;
    for (int i = 0; i < cap; ++i)
      if (!s.coefficient(i).is_zero()) last = i;
    for (int i = 0; i <= last; ++i) c.push_back(jr(s.coefficient(i)));
  } else {
    out["precision"] = s.precision();
    for (int i = 0; i < s.precision(); ++i) c.push_back(jr(s.coefficient(i)));
  }
  out["coefficients"] = std::move(c);
  return out;
}

json jperm(const Permutation& p) {
  return json{{"cycles", p.cycle_string()}, {"images", p.images()}};
}

json jtuple(const NielsenTuple& t) {
  json a = json::array();
  for (const auto& s : t.sigma) a.push_back(jperm(s));
  return a;
}

json jmodel(const NormalizedModel<RationalFunction>& m) {
  json j;
  j["n"] = m.n;
  j["a"] = jrfpoly(m.a);
  j["beta0"] = jrf(m.beta0);
  j["beta1"] = jrf(m.beta1);
  j["gamma"] = jrf(m.gamma);
  j["b"] = jrfpoly(m.b);
  j["q0"] = jrf(m.q0);
  j["q1"] = jrf(m.q1);
  j["h"] = jrfpoly(m.h);
  j["lambda"] = jrf(m.lambda);
  return j;
}

json jverification(const VerificationReport& rep) {
  json j;
  j["n"] = rep.n;
  j["identities_hold"] = rep.identities_hold;
  j["factors_separable"] = rep.factors_separable;
  j["fibers_reduced"] = rep.fibers_reduced;
  j["hn_degree"] = rep.hn_degree;
  j["patterns"] = json::array({rep.patterns[0], rep.patterns[1], rep.patterns[2]});
  j["expected"] = rep.expected;
  j["assignment"] = rep.assignment;
  j["labeling_z3_z2_z1"] = rep.labeling_z3_z2_z1;
  j["patterns_match"] = rep.patterns_match;
  j["ok"] = rep.ok;
  return j;
}

Polynomial<Rational> poly_from(const json& a) {
  std::vector<Rational> c;
  for (const auto& v : a) c.push_back(Rational::from_string(v.get<std::string>()));
  return Polynomial<Rational>(std::move(c));
}

}  // namespace

std::string nielsen_json(int n, bool oracle) {
  json j = root();
  j["n"] = n;
  auto reps = enumerate_sni(n);
  j["class_count"] = reps.size();
  j["expected_class_count"] = 3 * (n / 2 - 1);
  json classes = json::array();
  for (const auto& [label, tuple] : reps)
    classes.push_back(json{{"label", label.str()}, {"tuple", jtuple(tuple)}});
  j["classes"] = std::move(classes);
  bool ok = static_cast<int>(reps.size()) == 3 * (n / 2 - 1);
  if (oracle) {
    auto brute = brute_force_sni(n);
    std::vector<NielsenTuple> canon;
    for (const auto& [label, tuple] : reps) canon.push_back(canonicalize(tuple));
    std::sort(canon.begin(), canon.end());
    bool matches = canon == brute;
    j["oracle"] = json{{"count", brute.size()}, {"matches", matches}};
    ok = ok && matches;
  }
  j["certified"] = ok;
  return j.dump(2);
}

std::string braid_orbit_json(int n) {
  MonodromyReport mono = gamma_monodromy(n);
  BraidOrbitReport orbits = braid_orbits(n);
  json j = root();
  j["n"] = n;
  j["degree"] = mono.degree;
  json labels = json::array();
  for (const auto& l : mono.labels) labels.push_back(l.str());
  j["labels"] = std::move(labels);
  j["gamma1"] = jperm(mono.gamma1);
  j["gamma2"] = jperm(mono.gamma2);
  j["gamma12"] = jperm(mono.gamma12);
  j["cycle_types"] = mono.cycle_types;
  j["expected_ramification"] = expected_ramification(n);
  j["orbit_count"] = mono.orbit_count;
  j["genus"] = mono.genus;
  j["gamma3_consistent"] = mono.gamma3_consistent;
  j["matches_expected"] = mono.matches_expected;
  j["reachable_count"] = orbits.reachable_count;
  j["class_count"] = orbits.class_count;
  j["braid_orbit_count"] = orbits.orbit_count;
  j["certified"] = mono.matches_expected && mono.genus == 0 && mono.orbit_count == 1 &&
                   mono.gamma3_consistent && orbits.orbit_count == 1;
  return j.dump(2);
}

std::string descent_json(int n) {
  json j = root();
  j["n"] = n;
  json verdicts = json::array();
  for (const auto& [label, tuple] : enumerate_sni(n)) {
    DescentVerdict v = descent_check(tuple);
    json e;
    e["label"] = label.str();
    e["defined_over_R"] = v.defined_over_R;
    e["tau"] = v.tau ? json(jperm(*v.tau)) : json(nullptr);
    e["totally_real"] = v.totally_real;
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  auto real_classes = find_totally_real_classes(n);
  json labels = json::array();
  for (const auto& l : real_classes) labels.push_back(l.str());
  j["totally_real_classes"] = std::move(labels);
  j["certified"] = real_classes.size() == 1 &&
                   real_classes.front() == ClassLabel{Family::A, n / 2 - 1};
  return j.dump(2);
}

std::string an_lift_json(int n) {
  json j = root();
  j["n"] = n;
  ClassLabel label = find_totally_real_classes(n).front();
  AnLiftReport rep = an_product(make_class(n, label));
  j["label"] = label.str();
  json lifted = json::array();
  for (const auto& p : rep.lifted) lifted.push_back(jperm(p));
  j["lifted"] = std::move(lifted);
  j["parities"] = rep.parities;
  j["quadratic_branch_points"] = rep.quadratic_branch_points;
  j["product_one"] = rep.product_one;
  j["transitive"] = rep.transitive;
  j["all_lifts_even"] = rep.all_lifts_even;
  j["order_checked"] = rep.order_checked;
  if (rep.order_checked) j["order"] = rep.order.get_str();
  std::vector<int> expected = n % 4 == 0 ? std::vector<int>{1, 3} : std::vector<int>{1, 4};
  mpz_class fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  j["certified"] = rep.product_one && rep.transitive && rep.all_lifts_even &&
                   rep.quadratic_branch_points == expected &&
                   (!rep.order_checked || rep.order == fact);
  return j.dump(2);
}

std::string degenerate_json(int n) {
  json j = root();
  j["n"] = n;
  RationalFunction upper = pade_degenerate(n);
  RationalFunction lower = chebyshev_degenerate(n);
  ChebyshevFactors factors = chebyshev_factors(n);
  CoverModel<Rational> model = initial_coefficients(n);
  j["upper_member"] = jrf(upper);
  j["lower_member"] = jrf(lower);
  j["lower_factors"] =
      json{{"a0", jpoly(factors.a0)}, {"h0", jpoly(factors.h0)},
           {"lambda_lead", jr(factors.lambda_lead)}};
  json slots;
  slots["alpha"] = jvec(model.alpha);
  slots["beta0"] = jr(model.beta0);
  slots["beta1"] = jr(model.beta1);
  slots["gamma"] = jr(model.gamma);
  slots["delta"] = jvec(model.delta);
  slots["epsilon0"] = jr(model.epsilon0);
  slots["eta"] = jvec(model.eta);
  slots["lambda"] = jr(model.lambda);
  j["initial_model"] = std::move(slots);
  bool residuals = model.residual_at_one().is_zero() && model.residual_at_lambda().is_zero();
  j["residuals_vanish"] = residuals;
  j["certified"] = residuals;
  return j.dump(2);
}

std::string to_json(const DeformationState& state) {
  json j = root();
  j["n"] = state.n;
  j["precision"] = state.precision;
  const auto& m = state.model;
  const int cap = state.precision;
  json slots;
  json alpha = json::array(), delta = json::array(), eta = json::array();
  for (const auto& s : m.alpha) alpha.push_back(jseries(s, cap));
  for (const auto& s : m.delta) delta.push_back(jseries(s, cap));
  for (const auto& s : m.eta) eta.push_back(jseries(s, cap));
  slots["alpha"] = std::move(alpha);
  slots["beta0"] = jseries(m.beta0, cap);
  slots["beta1"] = jseries(m.beta1, cap);
  slots["gamma"] = jseries(m.gamma, cap);
  slots["delta"] = std::move(delta);
  slots["epsilon0"] = jseries(m.epsilon0, cap);
  slots["eta"] = std::move(eta);
  slots["lambda"] = jseries(m.lambda, cap);
  j["model"] = std::move(slots);
  bool residuals = vanishes_mod(m.residual_at_one(), cap) &&
                   vanishes_mod(m.residual_at_lambda(), cap);
  j["residuals_vanish_mod_precision"] = residuals;
  j["lambda_valuation"] = m.lambda.valuation();
  j["certified"] = residuals && m.lambda.valuation() == state.n;
  return j.dump(2);
}

std::string to_json(const SeriesNormalization& series, const ReconstructionResult& rec) {
  json j = root();
  j["n"] = series.model.n;
  j["precision"] = series.precision;
  j["parity"] = series.parity;
  j["generator"] = rec.generator;
  j["model"] = jmodel(rec.model);
  bool exact = rec.model.residual_at_one().is_zero() &&
               rec.model.residual_at_lambda().is_zero();
  j["identities_exact"] = exact;
  j["certified"] = exact;
  return j.dump(2);
}

std::string to_json(const VerificationReport& rep) {
  json j = root();
  j["verification"] = jverification(rep);
  j["certified"] = rep.ok;
  return j.dump(2);
}

std::string to_json(const PipelineResult& pipe) {
  json j = root();
  j["n"] = pipe.report.n;
  j["precision"] = pipe.normalization.precision;
  j["parity"] = pipe.normalization.parity;
  j["generator"] = pipe.reconstruction.generator;
  j["lambda_series_valuation"] = pipe.lambda_series_valuation;
  j["model"] = jmodel(pipe.reconstruction.model);
  j["verification"] = jverification(pipe.report);
  j["certified"] = pipe.report.ok && pipe.lambda_series_valuation == pipe.report.n;
  return j.dump(2);
}

std::string to_json(const SpecializationReport& rep, const AnCheckReport& an) {
  json j = root();
  j["n"] = rep.n;
  j["t0"] = jr(rep.t0);
  j["degenerate_t"] = jr(rep.degenerate_t);
  json interval;
  interval["h_value"] = jr(rep.interval.h_value);
  interval["upper"] = jr(rep.interval.upper);
  interval["branch_order_nominal"] = rep.interval.branch_order_nominal;
  interval["interval_totally_real"] = rep.interval.interval_totally_real;
  interval["controls_separate"] = rep.interval.controls_separate;
  json probes = json::array();
  for (const auto& p : rep.interval.probes) {
    probes.push_back(json{{"x0", jr(p.x0)},
                          {"real_root_count", p.real_root_count},
                          {"distinct", p.distinct},
                          {"interior", p.interior},
                          {"fiber", jpoly(p.fiber)}});
  }
  interval["probes"] = std::move(probes);
  j["interval"] = std::move(interval);
  json evidence;
  json patterns = json::array();
  for (const auto& pp : rep.evidence.patterns)
    patterns.push_back(json{{"p", pp.p}, {"degrees", pp.degrees}});
  evidence["patterns"] = std::move(patterns);
  evidence["bad_primes"] = rep.evidence.bad_primes;
  evidence["irreducible_witness"] =
      rep.evidence.irreducible_witness ? json(*rep.evidence.irreducible_witness) : json(nullptr);
  evidence["has_long_cycle"] = rep.evidence.has_long_cycle;
  evidence["has_transposition"] = rep.evidence.has_transposition;
  evidence["has_odd_pattern"] = rep.evidence.has_odd_pattern;
  evidence["verdict"] = str(rep.evidence.verdict);
  j["evidence"] = std::move(evidence);
  j["certified_x0"] = rep.certified_x0 ? json(jr(*rep.certified_x0)) : json(nullptr);
  json search = json::array();
  for (const auto& s : rep.search) {
    json e;
    e["t0"] = jr(s.t0);
    e["h"] = s.h ? json(jr(*s.h)) : json(nullptr);
    e["outcome"] = s.outcome;
    search.push_back(std::move(e));
  }
  j["search"] = std::move(search);
  json ja;
  ja["n"] = an.n;
  ja["t0"] = jr(an.t0);
  ja["parities"] = an.parities;
  ja["quadratic_branch_points"] = an.quadratic_branch_points;
  ja["expected_positions"] = an.expected_positions;
  ja["positions_match"] = an.positions_match;
  ja["product_one"] = an.product_one;
  ja["transitive"] = an.transitive;
  ja["all_lifts_even"] = an.all_lifts_even;
  ja["defined_over_R"] = an.defined_over_R;
  ja["totally_real"] = an.totally_real;
  j["an_check"] = std::move(ja);
  j["ok"] = rep.ok;
  j["certified"] = rep.ok && an.positions_match && an.all_lifts_even;
  return j.dump(2);
}

std::string verify_n6_json(const PipelineResult& pipe) {
  if (pipe.report.n != 6)
    throw invalid_parameter("the closed-form comparison is pinned to degree 6");
  const auto& m = pipe.reconstruction.model;
  using PQ = Polynomial<Rational>;
  auto rf = [](std::vector<long> num, std::vector<long> den) {
    std::vector<Rational> a(num.begin(), num.end()), b(den.begin(), den.end());
    return RationalFunction(PQ(std::move(a)), PQ(std::move(b)));
  };
  auto lin = [](const Rational& c) { return PQ(std::vector<Rational>{c, Rational(1)}); };

  PQ hn_num = lin(Rational(8)) * lin(Rational(13, 5)) * lin(Rational(13, 5)) *
              lin(Rational(8, 5)) * lin(Rational(8, 5)) * lin(Rational(8, 5));
  PQ hn_den = Rational(-15) * (lin(Rational(8, 3)) * lin(Rational(56, 25)) *
                               lin(Rational(56, 25)) * lin(Rational(56, 25)));
  PQ one_num = lin(Rational(2)) * lin(Rational(16, 5)) * lin(Rational(16, 5)) *
               lin(Rational(16, 5)) * lin(Rational(16, 5)) * lin(Rational(16, 5));

  std::vector<std::pair<std::string, bool>> checks = {
      {"generator is beta1", pipe.reconstruction.generator == "beta1"},
      {"beta1 is the coordinate", m.beta1 == RationalFunction::variable()},
      {"beta0", m.beta0 == rf({128, 192, 120, 25}, {96, 36})},
      {"gamma", m.gamma == rf({526848, 705600, 315000, 46875}, {2048, 768})},
      {"a2 vanishes", m.a.coeff(2).is_zero()},
      {"a1", m.a.coeff(1) == rf({120, 75}, {16})},
      {"a0", m.a.coeff(0) == rf({4096, 6720, 3600, 625}, {256, 96})},
      {"b2", m.b.coeff(2) == RationalFunction(Rational(3))},
      {"b1", m.b.coeff(1) == rf({168, 75}, {8})},
      {"b0", m.b.coeff(0) == rf({11136, 12960, 4950, 625}, {128, 48})},
      {"q1", m.q1 == rf({-8, -5}, {2})},
      {"q0", m.q0 == rf({2176, 2720, 1050, 125}, {128, 48})},
      {"h1", m.h.coeff(1) == rf({8, 5}, {4})},
      {"h0", m.h.coeff(0) == rf({320, 424, 180, 25}, {64, 24})},
      {"multiplier factored form", m.lambda == RationalFunction(hn_num, hn_den)},
      {"multiplier at 0", m.lambda.eval(Rational(0)) == Rational(-169, 343)},
      {"multiplier vanishes at -8/5", m.lambda.eval(Rational(-8, 5)).is_zero()},
      {"numerator identity of multiplier minus one", hn_num + Rational(-1) * hn_den == one_num},
      {"identities exact",
       m.residual_at_one().is_zero() && m.residual_at_lambda().is_zero()},
      {"certified", pipe.report.ok},
  };

  json j = root();
  j["n"] = 6;
  json arr = json::array();
  bool all = true;
  for (const auto& [name, pass] : checks) {
    arr.push_back(json{{"check", name}, {"pass", pass}});
    all = all && pass;
  }
  j["checks"] = std::move(arr);
  j["all_pass"] = all;
  j["certified"] = all;
  return j.dump(2);
}

bool replay_specialization(const std::string& json_text, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  try {
    json j = json::parse(json_text);
    if (j.value("schema", std::string()) != kSchema) return fail("unknown schema");
    const int n = j.at("n").get<int>();
    const json& interval = j.at("interval");
    Rational upper = Rational::from_string(interval.at("upper").get<std::string>());
    if (upper.sign() <= 0) return fail("stored interval is empty");

    bool interior_ok = true, controls_ok = true;
    for (const json& p : interval.at("probes")) {
      Rational x0 = Rational::from_string(p.at("x0").get<std::string>());
      Polynomial<Rational> fiber = poly_from(p.at("fiber"));
      if (fiber.degree() != n) return fail("stored fiber has the wrong degree");
      int count = sturm_count(fiber);
      if (count != p.at("real_root_count").get<int>())
        return fail("Sturm count mismatch at x0 = " + x0.str());
      bool distinct = squarefree_part(fiber).degree() == fiber.degree();
      if (distinct != p.at("distinct").get<bool>())
        return fail("squarefree flag mismatch at x0 = " + x0.str());
      if (p.at("interior").get<bool>()) {
        if (!(x0.sign() > 0 && x0 < upper))
          return fail("interior probe outside the declared interval");
        interior_ok = interior_ok && distinct && count == n;
      } else {
        controls_ok = controls_ok && count < n;
      }
    }
    if (interior_ok != interval.at("interval_totally_real").get<bool>())
      return fail("interval verdict does not match the probes");
    if (controls_ok != interval.at("controls_separate").get<bool>())
      return fail("control verdict does not match the probes");

    const json& witness = j.at("evidence").at("irreducible_witness");
    bool have_witness = !witness.is_null();
    if (have_witness) {
      const json& cx = j.at("certified_x0");
      if (cx.is_null()) return fail("witness without a certified probe");
      Rational x0 = Rational::from_string(cx.get<std::string>());
      const json* probe = nullptr;
      for (const json& p : interval.at("probes"))
        if (Rational::from_string(p.at("x0").get<std::string>()) == x0) probe = &p;
      if (!probe) return fail("certified probe not found");
      auto degrees = modp_factor_degrees(poly_from(probe->at("fiber")), witness.get<long>());
      if (degrees != std::vector<int>{n})
        return fail("witness prime does not give the full-degree pattern");
    }
    bool ok = interior_ok && controls_ok && have_witness;
    if (ok != j.at("ok").get<bool>()) return fail("stored verdict does not replay");
    return true;
  } catch (const std::exception& e) {
    return fail(std::string("replay aborted: ") + e.what());
  }
}

}  // namespace hurwitz
