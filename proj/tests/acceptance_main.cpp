// Acceptance gate: one line per criterion, exit nonzero unless all pass.
// Pipelines are computed once and shared across the criteria that need them.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/braid.hpp"
#include "hurwitz/degenerate.hpp"
#include "hurwitz/descent.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/specialize.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

using PQ = Polynomial<Rational>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

const PipelineResult& pipeline(int n) {
  static std::map<int, PipelineResult> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, run_pipeline(n)).first;
  return it->second;
}

RationalFunction rf(std::vector<long> num, std::vector<long> den) {
  std::vector<Rational> a(num.begin(), num.end()), b(den.begin(), den.end());
  return RationalFunction(PQ(std::move(a)), PQ(std::move(b)));
}

PQ lin(const Rational& c) { return PQ({c, Rational(1)}); }

PQ pow(PQ base, int e) {
  PQ out({Rational(1)});
  for (; e > 0; --e) out *= base;
  return out;
}

Outcome class_counts() {
  Outcome o;
  for (int n = 6; n <= 20; n += 2) {
    auto classes = enumerate_sni(n);
    expect(o, static_cast<int>(classes.size()) == 3 * (n / 2 - 1),
           "class count off at n = " + std::to_string(n));
    std::map<Family, int> sizes;
    for (const auto& [label, t] : classes) ++sizes[label.family];
    bool fam = sizes[Family::A] == n / 2 && sizes[Family::B] == n / 2 - 1 &&
               sizes[Family::C] == n / 2 - 2;
    expect(o, fam, "family sizes off at n = " + std::to_string(n));
  }
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  for (int n : {6, 8}) {
    auto oracle = brute_force_sni(n);
    std::set<NielsenTuple> canon;
    for (const auto& [label, t] : enumerate_sni(n)) canon.insert(canonicalize(t));
    expect(o, std::set<NielsenTuple>(oracle.begin(), oracle.end()) == canon,
           "oracle misses or adds classes at n = " + std::to_string(n));
  }
  return o;
}

Outcome curve_invariants() {
  Outcome o;
  for (int n = 6; n <= 20; n += 2) {
    auto rep = gamma_monodromy(n);
    expect(o, rep.matches_expected, "ramification table at n = " + std::to_string(n));
    expect(o, rep.orbit_count == 1, "disconnected action at n = " + std::to_string(n));
    expect(o, rep.genus == 0, "genus nonzero at n = " + std::to_string(n));
    expect(o, rep.gamma3_consistent, "third loop inconsistent at n = " + std::to_string(n));
  }
  return o;
}

Outcome closed_form_monodromy() {
  Outcome o;
  for (int n = 10; n <= 20; n += 2) {
    auto computed = gamma_monodromy(n);
    auto predicted = predicted_monodromy(n);
    expect(o, computed.gamma1 == predicted.gamma1, "gamma1 at n = " + std::to_string(n));
    expect(o, computed.gamma2 == predicted.gamma2, "gamma2 at n = " + std::to_string(n));
    expect(o, computed.gamma12 == predicted.gamma12, "gamma12 at n = " + std::to_string(n));
  }
  // below n = 10 the index formulas degenerate: cycle types only
  for (int n : {6, 8})
    expect(o, gamma_monodromy(n).matches_expected,
           "cycle types at n = " + std::to_string(n));
  return o;
}

Outcome unique_real_class() {
  Outcome o;
  for (int n = 6; n <= 20; n += 2) {
    std::vector<ClassLabel> found;
    bool tau_identity = false;
    for (const auto& [label, t] : enumerate_sni(n)) {
      auto v = descent_check(t);
      if (!v.totally_real) continue;
      found.push_back(label);
      tau_identity = v.tau && *v.tau == Permutation(n);
    }
    expect(o, found.size() == 1, "real class not unique at n = " + std::to_string(n));
    if (found.size() == 1) {
      expect(o, found[0] == ClassLabel{Family::A, n / 2 - 1},
             "wrong class at n = " + std::to_string(n));
      expect(o, tau_identity, "descent twist not trivial at n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome degenerate_members() {
  Outcome o;
  for (int n = 6; n <= 20; n += 2) {
    const std::string at = " at n = " + std::to_string(n);
    auto x = pade_degenerate(n);
    // stored with monic denominator: rescale so the numerator is X^n exactly
    Rational c = x.numerator().leading();
    PQ q = (Rational(1) / c) * x.denominator();
    expect(o, q.eval(Rational(1)) == Rational(1), "Q(1)" + at);
    expect(o, q.derivative().eval(Rational(1)) == Rational(n), "Q'(1)" + at);
    expect(o, q.derivative().derivative().eval(Rational(1)) == Rational(n * (n - 1)),
           "Q''(1)" + at);
    PQ p = (Rational(1) / c) * x.numerator() - q;
    expect(o, p.eval(Rational(1)).is_zero() && p.derivative().eval(Rational(1)).is_zero() &&
               p.derivative().derivative().eval(Rational(1)).is_zero(),
           "contact order below three" + at);
    expect(o, !p.derivative().derivative().derivative().eval(Rational(1)).is_zero(),
           "contact order above three" + at);

    auto y = chebyshev_degenerate(n);
    std::vector<int> at0(n / 2, 2);
    std::vector<int> at1((n - 2) / 2, 2);
    at1.insert(at1.end(), {1, 1});
    expect(o, fiber_multiplicities(y, Rational(0)) == at0, "pattern over 0" + at);
    expect(o, fiber_multiplicities(y, Rational(1)) == at1, "pattern over 1" + at);
  }
  return o;
}

Outcome degree_six_closed_form() {
  Outcome o;
  auto j = nlohmann::json::parse(verify_n6_json(pipeline(6)));
  expect(o, j["all_pass"] == true, "report not clean");
  for (const auto& c : j["checks"])
    expect(o, c["pass"] == true, std::string("check failed: ") + c["check"].get<std::string>());
  return o;
}

Outcome shift_identity() {
  Outcome o;
  PQ lhs = lin(Rational(8)) * pow(lin(Rational(13, 5)), 2) * pow(lin(Rational(8, 5)), 3) +
           Rational(15) * (lin(Rational(8, 3)) * pow(lin(Rational(56, 25)), 3));
  PQ rhs = lin(Rational(2)) * pow(lin(Rational(16, 5)), 5);
  expect(o, lhs == rhs, "expansion differs");
  return o;
}

Outcome degenerate_anchors() {
  Outcome o;
  auto init = initial_coefficients(6);
  const Rational th(-8, 5);
  expect(o, init.beta1 == th, "starting beta1");
  expect(o, init.delta == std::vector<Rational>{Rational(10), Rational(6), Rational(3)},
         "starting delta");

  // the closed-form cube cofactor evaluated at the degenerate value gives the
  // delta initials back
  auto b0 = rf({11136, 12960, 4950, 625}, {128, 48});
  auto b1 = rf({168, 75}, {8});
  expect(o, b0.eval(th) == Rational(10) && b1.eval(th) == Rational(6), "cofactor at -8/5");

  auto gamma = rf({526848, 705600, 315000, 46875}, {2048, 768});
  expect(o, gamma.eval(th) == Rational(15), "gamma at -8/5");

  auto hn = RationalFunction(
      -(lin(Rational(8)) * pow(lin(Rational(13, 5)), 2) * pow(lin(Rational(8, 5)), 3)),
      lin(Rational(8, 3)) * pow(lin(Rational(56, 25)), 3));
  expect(o, hn.eval(th).is_zero(), "multiplier at -8/5");
  return o;
}

Outcome pipeline_certification(std::string& times) {
  Outcome o;
  for (int n : {6, 8, 10, 12}) {
    auto start = std::chrono::steady_clock::now();
    const auto& pipe = pipeline(n);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sn = %d: %.1f s", times.empty() ? "" : ", ", n, s);
    times += buf;
    expect(o, pipe.report.ok, "certification failed at n = " + std::to_string(n));
    expect(o, pipe.lambda_series_valuation == n,
           "multiplier valuation off at n = " + std::to_string(n));
  }
  return o;
}

Outcome real_specialization() {
  Outcome o;
  for (int n : {6, 8}) {
    const std::string at = " at n = " + std::to_string(n);
    SpecializationReport rep = specialize_family(pipeline(n));
    int interior = 0;
    for (const auto& p : rep.interval.probes) {
      if (p.interior) {
        ++interior;
        expect(o, p.real_root_count == n && p.distinct, "interior probe short" + at);
      } else {
        expect(o, p.real_root_count < n, "exterior control full" + at);
      }
    }
    expect(o, interior >= 5, "fewer than five interior probes" + at);
    expect(o, rep.evidence.irreducible_witness.has_value(), "no modular witness" + at);
    expect(o, rep.ok, "report not certified" + at);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double limit;  // seconds, 0 = untimed
    Outcome (*run)();
  };
  // criteria 7 and 10 carry their own soft targets and are reported untimed
  const Criterion table[] = {
      {"class counts and family sizes, n = 6..20", 5, class_counts},
      {"exhaustive oracle agreement, n = 6 and 8", 60, oracle_agreement},
      {"curve invariants: ramification, connectivity, genus, n = 6..20", 30, curve_invariants},
      {"closed-form monodromy actions", 0, closed_form_monodromy},
      {"unique totally real class, n = 6..20", 0, unique_real_class},
      {"degenerate members: contact orders and fiber patterns, n = 6..20", 10, degenerate_members},
      {"degree six family equals its closed form", 0, degree_six_closed_form},
      {"quintic shift identity of the multiplier factors", 1, shift_identity},
      {"degenerate anchors of the degree six family", 0, degenerate_anchors},
      {nullptr, 0, nullptr},  // 10 runs with its per-degree timing below
      {"totally real specialization with modular witness, n = 6 and 8", 60, real_specialization},
  };

  int passed = 0, total = 0;
  auto report = [&](int id, const char* label, const Outcome& o, double s) {
    ++total;
    if (o.pass) ++passed;
    std::printf("[%2d] %s  %6.2f s  %s%s%s\n", id, o.pass ? "PASS" : "FAIL", s, label,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  };

  for (int i = 0; i < 11; ++i) {
    if (table[i].run == nullptr) {
      std::string times;
      auto start = std::chrono::steady_clock::now();
      Outcome o = pipeline_certification(times);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::string label = "pipeline certification (" + times + ")";
      report(i + 1, label.c_str(), o, s);
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = table[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && table[i].limit > 0 && s > table[i].limit) {
      o.pass = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, "time budget %.0f s exceeded", table[i].limit);
      o.detail = buf;
    }
    report(i + 1, table[i].label, o, s);
  }

  std::printf("acceptance: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
