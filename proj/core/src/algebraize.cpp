#include "hurwitz/algebraize.hpp"

#include <cstdint>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/linalg.hpp"

namespace hurwitz {

namespace {

using S = TruncatedSeries;
using PS = Polynomial<S>;

// arithmetic mod 2^61 - 1, used to locate the minimal fit degree cheaply
// before committing to exact kernel computations
using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kFitPrime = 2305843009213693951ULL;

u64 mod_mul(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kFitPrime); }

u64 mod_pow(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 mod_of(const Rational& x) {
  u64 num = mpz_fdiv_ui(x.numerator().get_mpz_t(), kFitPrime);
  u64 den = mpz_fdiv_ui(x.denominator().get_mpz_t(), kFitPrime);
  if (den == 0) throw bad_reduction_prime("fit prime divides a coefficient denominator");
  return mod_mul(num, mod_pow(den, kFitPrime - 2));
}

std::vector<u64> mod_coeffs(const S& s, int order) {
  std::vector<u64> v(order, 0);
  int top = std::min(order, s.precision());
  for (int i = 0; i < top; ++i) v[i] = mod_of(s.coefficient(i));
  return v;
}

int mod_rank(std::vector<std::vector<u64>>& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    u64 scale = mod_pow(m[rank][c], kFitPrime - 2);
    for (int j = c; j < cols; ++j) m[rank][j] = mod_mul(m[rank][j], scale);
    for (int r = rank + 1; r < rows; ++r) {
      u64 f = m[r][c];
      if (!f) continue;
      for (int j = c; j < cols; ++j)
        m[r][j] = (m[r][j] + kFitPrime - mod_mul(f, m[rank][j])) % kFitPrime;
    }
    ++rank;
  }
  return rank;
}

S spow(const S& base, int e, int N) {
  S out(1);
  for (int i = 0; i < e; ++i) out = (out * base).truncated(N);
  return out;
}

// zero modulo mu^k, with at least that much known
bool series_vanishes_mod(const S& s, int k) {
  return s.precision() >= k && s.valuation() >= k;
}

void fold_parity(const S& c, int N, int& g) {
  int bound = std::min(c.precision(), N);
  for (int e = 1; e < bound; ++e)
    if (!c.coefficient(e).is_zero()) g = std::gcd(g, e);
}

// exact Pade style fit: find P, Q of degree <= d with P(g) + c Q(g) = 0 to
// the full carried order. A rank scan mod a large prime locates the minimal
// workable d first; the exact kernel is then computed on a short window,
// widened up to the full order if echelon vectors mix in window-only noise.
struct Fitter {
  S g;
  int N;
  int margin;
  std::vector<S> gpow;
  std::vector<std::vector<u64>> gpow_mod;

  Fitter(const S& generator, int order, int margin_)
      : g(generator.truncated(order)), N(order), margin(margin_) {
    gpow = {S(1).truncated(N), g};
  }

  int degree_cap() const { return (N - margin - 2) / 2; }

  void ensure(int d) {
    while (static_cast<int>(gpow.size()) <= d)
      gpow.push_back((gpow.back() * g).truncated(N));
    while (gpow_mod.size() < gpow.size())
      gpow_mod.push_back(mod_coeffs(gpow[gpow_mod.size()], N));
  }

  bool relation_exists_mod(const std::vector<u64>& c, int d) {
    ensure(d);
    std::vector<std::vector<u64>> m(N, std::vector<u64>(2 * d + 2));
    for (int j = 0; j <= d; ++j)
      for (int r = 0; r < N; ++r) {
        m[r][j] = gpow_mod[j][r];
        u128 acc = 0;
        for (int i = 0; i <= r; ++i) acc += static_cast<u128>(c[i]) * gpow_mod[j][r - i] % kFitPrime;
        m[r][d + 1 + j] = static_cast<u64>(acc % kFitPrime);
      }
    return mod_rank(m) < 2 * d + 2;
  }

  // minimal d admitting a relation to the full carried order, or -1; the
  // modular answer only steers the exact computation and is re-verified there
  int scan(const S& coeff) {
    std::vector<u64> c = mod_coeffs(coeff.truncated(N), N);
    int cap = degree_cap();
    int d = 1;
    while (true) {
      if (relation_exists_mod(c, d)) {
        int lo = d / 2 + 1, hi = d;
        while (lo < hi) {
          int mid = (lo + hi) / 2;
          if (relation_exists_mod(c, mid)) hi = mid;
          else lo = mid + 1;
        }
        return lo;
      }
      if (d >= cap) return -1;
      d = std::min(2 * d, cap);
    }
  }

  RationalFunction fit(const S& coeff) {
    S c = coeff.truncated(N);
    if (c.is_zero()) return RationalFunction();
    int cap = degree_cap();
    int start = 2;
    bool scanned = false;
    try {
      start = scan(c);
      scanned = true;
      if (start < 0)
        throw insufficient_precision("series order " + std::to_string(N) +
                                     " carries no fit of denominator degree up to " +
                                     std::to_string(cap));
    } catch (const bad_reduction_prime&) {
      // unusable prime for this coefficient: fall back to stepping d blindly
    }
    for (int d = start; d <= cap; d = scanned ? d + 1 : 2 * d) {
      ensure(d);
      std::vector<S> cg(d + 1);
      for (int j = 0; j <= d; ++j) cg[j] = (c * gpow[j]).truncated(N);
      for (int rows = std::min(N, 2 * d + 2 + margin);; rows = std::min(N, 2 * rows)) {
        std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(2 * d + 2));
        for (int r = 0; r < rows; ++r)
          for (int j = 0; j <= d; ++j) {
            M[r][j] = gpow[j].coefficient(r);
            M[r][d + 1 + j] = cg[j].coefficient(r);
          }
        for (const auto& v : kernel_basis(M)) {
          Polynomial<Rational> p{std::vector<Rational>(v.begin(), v.begin() + d + 1)};
          Polynomial<Rational> q{std::vector<Rational>(v.begin() + d + 1, v.end())};
          if (q.is_zero()) continue;
          S resid;
          for (int j = 0; j <= d; ++j) {
            if (!p.coeff(j).is_zero()) resid += (gpow[j] * S(p.coeff(j))).truncated(N);
            if (!q.coeff(j).is_zero()) resid += (cg[j] * S(q.coeff(j))).truncated(N);
          }
          if (series_vanishes_mod(resid, N)) return RationalFunction(-p, q);
        }
        if (rows >= N) break;
      }
    }
    throw insufficient_precision("series order " + std::to_string(N) +
                                 " cannot support a fit with denominator degree beyond " +
                                 std::to_string(cap));
  }
};

}  // namespace

SeriesNormalization normalize(const DeformationState& state) {
  int n = state.n, half = n / 2, N = state.precision;
  const CoverModel<S>& m = state.model;

  S shift_scale = S(Rational(2, n)) * m.alpha[half - 1];
  S s = S(1) + shift_scale;
  if (!s.is_unit()) throw non_unit_leading("affine rescaling factor is not a unit");
  S r = -shift_scale;
  S sinv = s.truncated(N).invert();

  PS lin{std::vector<S>{r, s}};
  auto transform = [&](const PS& p, int deg) {
    PS comp = p.compose(lin);
    S scale = spow(sinv, deg, N);
    std::vector<S> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = (comp.coeff(i) * scale).truncated(N);
    if (!(comp.coeff(deg) * scale - S(1)).is_zero())
      throw verification_failure("transformed factor failed to stay monic");
    c[deg] = S(1);
    return PS(std::move(c));
  };

  SeriesNormalization out;
  out.precision = N;
  NormalizedModel<S>& nm = out.model;
  nm.n = n;
  nm.a = transform(m.factor_a(), half);
  if (!nm.a.coeff(half - 1).is_zero())
    throw verification_failure("subleading coefficient of the upper factor survived");
  nm.b = transform(m.factor_b(), n - 3);
  nm.h = transform(m.factor_h(), half - 1);
  S mu = S::variable();
  nm.beta1 = ((S(2) * r + m.beta1) * sinv).truncated(N);
  nm.beta0 = ((r * r + m.beta1 * r + m.beta0) * sinv * sinv).truncated(N);
  nm.gamma = (m.gamma * spow(sinv, n - 2, N)).truncated(N);
  nm.q1 = ((S(2) * r - mu) * sinv).truncated(N);
  nm.q0 = ((r * (r - mu)) * sinv * sinv).truncated(N);
  nm.lambda = m.lambda.truncated(N);

  if (!vanishes_mod(nm.residual_at_one(), N) ||
      !vanishes_mod(nm.residual_at_lambda(), N))
    throw verification_failure("normalized residuals do not vanish to the carried order");

  int g = 0;
  for (const S& c : nm.a.coeffs()) fold_parity(c, N, g);
  for (const S& c : nm.b.coeffs()) fold_parity(c, N, g);
  for (const S& c : nm.h.coeffs()) fold_parity(c, N, g);
  for (const S* c : {&nm.beta0, &nm.beta1, &nm.gamma, &nm.q0, &nm.q1, &nm.lambda})
    fold_parity(*c, N, g);
  out.parity = g;
  return out;
}

ReconstructionResult reconstruct(const SeriesNormalization& series, int margin) {
  const NormalizedModel<S>& m = series.model;
  int n = m.n, half = n / 2, N = series.precision;
  if (margin < 0) throw invalid_parameter("margin must be nonnegative");

  std::pair<std::string, const S*> candidates[] = {
      {"beta1", &m.beta1},
      {"beta0", &m.beta0},
      {"gamma", &m.gamma},
      {"b_top", nullptr},
  };
  S b_top = m.b.coeff(n - 4);
  candidates[3].second = &b_top;

  // everything that will need a fit; used to screen generator candidates
  // (a parameter that is itself a several-to-one function of the curve
  // coordinate cannot express the others, and the scan rejects it cheaply)
  std::vector<S> targets;
  for (int i = 0; i < half; ++i) targets.push_back(m.a.coeff(i));
  for (int i = 0; i < n - 3; ++i) targets.push_back(m.b.coeff(i));
  for (int i = 0; i < half - 1; ++i) targets.push_back(m.h.coeff(i));
  for (const S* c : {&m.beta0, &m.beta1, &m.gamma, &m.q0, &m.q1, &m.lambda})
    targets.push_back(*c);

  std::string name;
  std::unique_ptr<Fitter> fitter;
  bool any_nonconstant = false;
  for (const auto& [nm_, ptr] : candidates) {
    S dev = *ptr - S(ptr->coefficient(0));
    if (dev.is_zero()) continue;
    any_nonconstant = true;
    auto trial = std::make_unique<Fitter>(*ptr, N, margin);
    bool usable = true;
    try {
      for (const S& t : targets) {
        S c = t.truncated(N);
        if (c.is_zero()) continue;
        if (trial->scan(c) < 0) {
          usable = false;
          break;
        }
      }
    } catch (const bad_reduction_prime&) {
      // scan unavailable; let the exact fits decide
    }
    if (usable) {
      name = nm_;
      fitter = std::move(trial);
      break;
    }
  }
  if (!any_nonconstant)
    throw generator_degenerate("every candidate parameter series is constant");
  if (!fitter)
    throw insufficient_precision(
        "no candidate parameter supports fits at the carried order " + std::to_string(N));
  auto fit_monic = [&](const PS& p, int deg) {
    std::vector<RationalFunction> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = fitter->fit(p.coeff(i));
    c[deg] = RationalFunction(Rational(1));
    return Polynomial<RationalFunction>(std::move(c));
  };

  ReconstructionResult out;
  out.generator = name;
  NormalizedModel<RationalFunction>& rm = out.model;
  rm.n = n;
  rm.a = fit_monic(m.a, half);
  rm.b = fit_monic(m.b, n - 3);
  rm.h = fit_monic(m.h, half - 1);
  rm.beta0 = fitter->fit(m.beta0);
  rm.beta1 = fitter->fit(m.beta1);
  rm.gamma = fitter->fit(m.gamma);
  rm.q0 = fitter->fit(m.q0);
  rm.q1 = fitter->fit(m.q1);
  rm.lambda = fitter->fit(m.lambda);

  // the fits were only checked against the carried series orders; the family
  // is accepted on exact grounds alone
  if (!rm.residual_at_one().is_zero() || !rm.residual_at_lambda().is_zero())
    throw verification_failure("reconstructed family fails the exact identities");
  return out;
}

}  // namespace hurwitz
