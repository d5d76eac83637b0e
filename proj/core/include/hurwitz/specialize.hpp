#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/cover_model.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/rational_function.hpp"
#include "hurwitz/verify.hpp"

namespace hurwitz {

// Every coefficient evaluated at the parameter value; throws parameter_at_pole.
NormalizedModel<Rational> specialize_model(const NormalizedModel<RationalFunction>& m,
                                           const Rational& t0);

// Primitive integer form of the numerator of S_0(t0, X) - x0 S_inf(t0, X),
// the degree-n polynomial whose roots are the fiber over x0. Requires t0
// away from coefficient poles, gamma(t0) != 0 and a separable pole quadratic
// (parameter_at_pole otherwise). With check_squarefree set, the probing
// default, x0 at a branch value (0, 1, lambda(t0)) or any repeated fiber
// root raises degenerate_fiber; unset it to look at the branch fibers
// themselves, whose repeated-root shapes are the point.
Polynomial<Rational> fiber_polynomial(const NormalizedModel<RationalFunction>& m,
                                      const Rational& t0, const Rational& x0,
                                      bool check_squarefree = true);

struct ProbeResult {
  Rational x0;
  int real_root_count = 0;
  bool distinct = false;  // fiber polynomial squarefree
  bool interior = false;  // sampled inside (0, upper); controls sit outside
  Polynomial<Rational> fiber;  // stored for independent replay
};

struct ProbeOptions {
  int count = 5;            // interior probes
  unsigned long seed = 0;   // sampler seed
  int max_denominator = 100;
};

// One parameter's worth of probing: H = lambda(t0) locates the movable
// branch value, probes sample the interval between 0 and min(H, 1), and the
// two exterior controls (2 and -1) must come out with fewer real roots.
struct IntervalProbe {
  Rational h_value;
  Rational upper;  // min(h_value, 1); the probed interval is (0, upper)
  bool branch_order_nominal = false;  // 0 < H < 1 as claimed for good t0
  std::vector<ProbeResult> probes;    // interior and controls, sorted by x0
  bool interval_totally_real = false;  // every interior probe: n distinct real roots
  bool controls_separate = false;      // every control: fewer than n real roots
};

// Sturm-counts real fiber roots at sampled interior points and at the
// exterior controls. Throws empty_interval when H = lambda(t0) is not
// strictly positive (the message reports its sign: the other side of the
// degenerate parameter value should be tried) or when H collides with the
// branch value 1.
IntervalProbe totally_real_probe(const NormalizedModel<RationalFunction>& m,
                                 const Rational& t0, const ProbeOptions& opt = {});

enum class SnVerdict { proved_desk_scale, strong_evidence, inconclusive };
std::string str(SnVerdict v);

struct PrimePattern {
  long p = 0;
  std::vector<int> degrees;  // ascending, with multiplicity
};

struct EvidenceReport {
  int n = 0;
  std::vector<PrimePattern> patterns;  // good primes, ascending
  std::vector<long> bad_primes;
  // prime whose factor pattern is {n}: irreducibility over Q is proved
  std::optional<long> irreducible_witness;
  bool has_long_cycle = false;     // a part n-1, or a prime part in (n/2, n)
  bool has_transposition = false;  // one part 2, all other parts odd
  bool has_odd_pattern = false;    // some pattern of odd parity (rules out A_n)
  SnVerdict verdict = SnVerdict::inconclusive;
};

// Fills witness, cycle flags and verdict from n and patterns alone.
// proved_desk_scale needs an irreducibility witness, a long cycle and a
// transposition pattern (transitive + primitive + transposition closes the
// group); strong_evidence needs the witness, an odd pattern and at least 20
// good primes; anything less is inconclusive.
void classify_evidence(EvidenceReport& rep);

// Factor degree patterns of f modulo the supplied primes (bad ones are
// recorded and skipped), classified as above. f must be squarefree;
// throws all_primes_bad when no prime yields a valid reduction.
EvidenceReport sn_evidence(const Polynomial<Rational>& f, const std::vector<long>& primes);

// Monodromy-level check of the index-two lift at the distinguished class:
// parities of the four coordinates, the positions of the two odd ones (the
// branch points carrying the quadratic subcover, expected {1, 3} when 4 | n
// and {1, 4} otherwise), and the descent verdict of the lifted tuple.
struct AnCheckReport {
  int n = 0;
  Rational t0;
  std::vector<int> parities;
  std::vector<int> quadratic_branch_points;
  std::vector<int> expected_positions;
  bool positions_match = false;
  bool product_one = false;
  bool transitive = false;
  bool all_lifts_even = false;
  bool defined_over_R = false;
  bool totally_real = false;
};

AnCheckReport an_specialization_check(int n, const Rational& t0);

struct ParameterSearchStep {
  Rational t0;
  std::optional<Rational> h;
  std::string outcome;  // "selected", "interval empty", "probes failed", "pole"
};

struct SpecializeOptions {
  std::optional<Rational> t0;  // fixed parameter; otherwise auto-search
  ProbeOptions probe;
  std::vector<long> primes;    // evidence primes; odd primes below 200 if empty
  int max_search_steps = 40;   // outward 1/10 steps, both sides of the base
};

struct SpecializationReport {
  int n = 0;
  Rational t0;
  Rational degenerate_t;  // parameter value of the degenerate member
  IntervalProbe interval;
  EvidenceReport evidence;               // for the certified fiber
  std::optional<Rational> certified_x0;  // probe whose fiber carries the witness
  std::vector<ParameterSearchStep> search;  // empty when t0 was fixed
  bool ok = false;  // probes pass, controls separate, witness found
};

// Base value of the parameter coordinate: the constant term of the
// generator's series, where the family degenerates.
Rational generator_base_value(const PipelineResult& pipe);

// The endgame for a certified pipeline result: pick t0 (fixed or searched
// outward from the degenerate value in 1/10 steps, first value whose interval
// probes and controls all pass), probe the interval, and certify one fiber's
// irreducibility through its modular patterns. Throws verification_failure
// on an uncertified input and empty_interval when the search exhausts its
// budget without a qualifying t0.
SpecializationReport specialize_family(const PipelineResult& pipe,
                                       const SpecializeOptions& opt = {});

}  // namespace hurwitz
