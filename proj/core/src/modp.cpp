#include "hurwitz/modp.hpp"

#include <algorithm>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

using Fp = std::vector<long>;  // lowest degree first, no trailing zeros

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw bad_reduction_prime("non invertible residue mod " + std::to_string(p));
  return ((t % p) + p) % p;
}

Fp mul(const Fp& a, const Fp& b, long p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<unsigned long>(a[i]) * b[j]) % p;
  }
  trim(c);
  return c;
}

// remainder of a modulo monic-normalized b
Fp rem(Fp a, const Fp& b, long p) {
  if (b.empty()) throw division_by_zero("mod p polynomial division by zero");
  long lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    long q = static_cast<long>(static_cast<unsigned long>(a.back()) * lead_inv % p);
    size_t off = a.size() - b.size();
    if (q != 0)
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = ((a[off + j] - static_cast<long>(static_cast<unsigned long>(q) * b[j] % p)) % p + p) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

Fp gcd_fp(Fp a, Fp b, long p) {
  while (!b.empty()) {
    Fp r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long s = mod_inverse(a.back(), p);
    for (auto& x : a) x = static_cast<long>(static_cast<unsigned long>(x) * s % p);
  }
  return a;
}

Fp derivative_fp(const Fp& a, long p) {
  if (a.size() <= 1) return {};
  Fp d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    d[i - 1] = static_cast<long>(static_cast<unsigned long>(a[i]) * (i % p) % p);
  trim(d);
  return d;
}

Fp powmod(Fp base, long e, const Fp& m, long p) {
  Fp result{1};
  base = rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

Fp exact_div_fp(const Fp& a, const Fp& b, long p) {
  // both inputs come from gcd computations, so the division is exact
  Fp q;
  Fp r = a;
  long lead_inv = mod_inverse(b.back(), p);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size()) {
    long c = static_cast<long>(static_cast<unsigned long>(r.back()) * lead_inv % p);
    size_t off = r.size() - b.size();
    q[off] = c;
    for (size_t j = 0; j < b.size(); ++j)
      r[off + j] = ((r[off + j] - static_cast<long>(static_cast<unsigned long>(c) * b[j] % p)) % p + p) % p;
    trim(r);
    if (r.size() > off + b.size() - 1) throw error("mod p division did not reduce");
  }
  if (!r.empty()) throw error("mod p division not exact");
  trim(q);
  return q;
}

}  // namespace

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long> odd_primes_below(long bound) {
  std::vector<long> out;
  for (long p = 3; p < bound; p += 2)
    if (is_small_prime(p)) out.push_back(p);
  return out;
}

std::vector<int> modp_factor_degrees(const Polynomial<Rational>& f, long p) {
  if (!is_small_prime(p) || p > (1L << 30))
    throw invalid_parameter("modulus must be a prime below 2^30");
  if (f.degree() <= 0) throw invalid_parameter("mod p factorization needs positive degree");

  Fp fbar(f.degree() + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) {
    const Rational& c = f.coeff(i);
    long den = static_cast<long>(mpz_fdiv_ui(c.denominator().get_mpz_t(), p));
    if (den == 0) throw bad_reduction_prime(std::to_string(p) + " divides a denominator");
    long num = static_cast<long>(mpz_fdiv_ui(c.numerator().get_mpz_t(), p));
    fbar[i] = static_cast<long>(static_cast<unsigned long>(num) * mod_inverse(den, p) % p);
  }
  if (fbar.back() == 0)
    throw bad_reduction_prime("degree drops mod " + std::to_string(p));
  {
    long s = mod_inverse(fbar.back(), p);
    for (auto& x : fbar) x = static_cast<long>(static_cast<unsigned long>(x) * s % p);
  }
  Fp d = derivative_fp(fbar, p);
  Fp g = gcd_fp(fbar, d, p);
  if (g.size() != 1)
    throw bad_reduction_prime("not squarefree mod " + std::to_string(p));

  // distinct degree factorization
  std::vector<int> degrees;
  Fp v = fbar;
  Fp h{0, 1};  // X
  int dg = 0;
  while (static_cast<int>(v.size()) - 1 > 0) {
    ++dg;
    if (2 * dg > static_cast<int>(v.size()) - 1) {
      degrees.push_back(static_cast<int>(v.size()) - 1);
      break;
    }
    h = powmod(std::move(h), p, v, p);
    Fp hx = h;
    // subtract X
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % p + p) % p;
    trim(hx);
    Fp gd = gcd_fp(hx, v, p);
    int deg_gd = static_cast<int>(gd.size()) - 1;
    if (deg_gd > 0) {
      for (int k = 0; k < deg_gd / dg; ++k) degrees.push_back(dg);
      v = exact_div_fp(v, gd, p);
      h = rem(std::move(h), v, p);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace hurwitz
