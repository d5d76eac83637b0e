#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Dense univariate polynomial over a coefficient type K. Coefficients are
// stored lowest degree first with no trailing zeros, so the zero polynomial
// has an empty coefficient vector and degree -1. K must be a field-like
// value type: default construction gives zero, arithmetic operators exist,
// and is_zero()/inv() are available where division is used.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : c_{K(c)} { normalize(); }  // NOLINT: scalar embeds
  Polynomial(K c) : c_{std::move(c)} { normalize(); }  // NOLINT: scalar embeds
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial monomial(int deg, K coeff = K(1)) {
    std::vector<K> c(deg + 1);
    c[deg] = std::move(coeff);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }

  K coeff(int i) const {
    if (i < 0 || i > degree()) return K();
    return c_[i];
  }
  const K& leading() const {
    if (is_zero()) throw error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial operator-() const {
    std::vector<K> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // multiply by X^k
  Polynomial shifted(int k) const {
    if (k < 0) throw error("negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<K> c(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<K> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
    return Polynomial(std::move(c));
  }

  K eval(const K& x) const {
    K r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // Horner evaluation in a richer coefficient domain L (L constructible from K)
  template <class L>
  L eval_as(const L& x) const {
    L r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + L(c_[i]);
    return r;
  }

  Polynomial compose(const Polynomial& g) const {
    Polynomial r;
    for (size_t i = c_.size(); i-- > 0;) r = r * g + Polynomial(c_[i]);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Polynomial<K> operator*(const K& s, const Polynomial<K>& p) {
  return Polynomial<K>(s) * p;
}

// Euclidean division; requires the divisor's leading coefficient to be
// invertible (always for field coefficients, unit constant term for series).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divrem(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw division_by_zero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<K>(), a};
  K lead_inv = inv(b.leading());
  std::vector<K> rem(a.coeffs());
  std::vector<K> quo(a.degree() - b.degree() + 1);
  for (int i = a.degree(); i >= b.degree(); --i) {
    K q = rem[i] * lead_inv;
    if (!q.is_zero()) {
      quo[i - b.degree()] = q;
      for (int j = 0; j <= b.degree(); ++j)
        rem[i - b.degree() + j] = rem[i - b.degree() + j] - q * b.coeff(j);
    }
  }
  return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw nonzero_remainder();
  return q;
}

template <class K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) {
  return divrem(a, b).second;
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  K s = inv(p.leading());
  std::vector<K> c(p.coeffs());
  for (auto& x : c) x = x * s;
  return Polynomial<K>(std::move(c));
}

// monic gcd over a field
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return make_monic(a);
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
  if (p.degree() <= 0) return p;
  auto g = gcd(p, p.derivative());
  if (g.degree() <= 0) return make_monic(p);
  return make_monic(exact_div(p, g));
}

// Yun decomposition in characteristic zero: returns monic f_1,...,f_k with
// f = lc * prod f_i^i and each f_i squarefree, pairwise coprime.
template <class K>
std::vector<Polynomial<K>> yun_decomposition(const Polynomial<K>& f) {
  std::vector<Polynomial<K>> out;
  if (f.degree() <= 0) return out;
  Polynomial<K> fm = make_monic(f);
  Polynomial<K> fp = fm.derivative();
  Polynomial<K> a = gcd(fm, fp);
  Polynomial<K> b = exact_div(fm, a);
  Polynomial<K> c = exact_div(fp, a);
  Polynomial<K> d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial<K> fi = gcd(b, d);
    out.push_back(fi);
    b = exact_div(b, fi);
    c = exact_div(d, fi);
    d = c - b.derivative();
  }
  return out;
}

// Exact square root of a monic polynomial of even degree, by matching
// coefficients from the top. Throws nonzero_remainder if p is not the
// square of a monic polynomial.
template <class K>
Polynomial<K> monic_sqrt(const Polynomial<K>& p) {
  if (p.is_zero() || p.degree() % 2 != 0 || !(p.leading() == K(1)))
    throw nonzero_remainder("not a monic square");
  int m = p.degree() / 2;
  std::vector<K> q(m + 1);
  q[m] = K(1);
  K half = inv(K(2));
  for (int k = 2 * m - 1; k >= m; --k) {
    // [X^k] q^2 = 2 q_{k-m} + sum over intermediate pairs
    K acc = p.coeff(k);
    for (int i = k - m + 1; i <= m - 1; ++i) {
      int j = k - i;
      if (j < 0 || j > m) continue;
      acc = acc - q[i] * q[j];
    }
    q[k - m] = acc * half;
  }
  Polynomial<K> root{std::vector<K>(q)};
  if (!(root * root == p)) throw nonzero_remainder("not a perfect square");
  return root;
}

inline Rational content(const Polynomial<Rational>& p) {
  if (p.is_zero()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    num_gcd = g;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    den_lcm = l;
  }
  Rational cont(num_gcd, den_lcm);
  return p.leading().sign() < 0 ? -cont : cont;
}

// integer coefficients, positive leading coefficient, content one
inline Polynomial<Rational> primitive_part(const Polynomial<Rational>& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  std::vector<Rational> v(p.coeffs());
  for (auto& x : v) x /= c;
  return Polynomial<Rational>(std::move(v));
}

template <class K, class L>
Polynomial<L> map_coeffs(const Polynomial<K>& p) {
  std::vector<L> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Polynomial<L>(std::move(c));
}

template <class K>
std::string poly_to_string(const Polynomial<K>& p, const std::string& var = "X") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    K c = p.coeff(i);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace hurwitz
