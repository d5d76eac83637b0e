#pragma once

#include <string>
#include <vector>

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Truncated power series in one deformation variable over Q. A value with
// precision p represents a series known modulo mu^p. Exact values (constants
// and polynomial expressions that are not approximations of anything) carry
// the sentinel precision kExact, which absorbs into min() the way infinite
// precision should. Coefficients are stored from mu^0 up, with virtual zeros
// past the end of the stored vector.
class TruncatedSeries {
 public:
  static constexpr int kExact = 1 << 28;

  TruncatedSeries() : prec_(kExact) {}
  TruncatedSeries(long c) : prec_(kExact), c_{Rational(c)} { trim(); }  // NOLINT
  TruncatedSeries(Rational c) : prec_(kExact), c_{std::move(c)} { trim(); }  // NOLINT
  TruncatedSeries(std::vector<Rational> coeffs, int prec);

  static TruncatedSeries variable();  // mu, exact
  static TruncatedSeries monomial(int k, Rational c = Rational(1));
  static TruncatedSeries from_polynomial(const Polynomial<Rational>& p);

  int precision() const { return prec_; }
  bool exact() const { return prec_ == kExact; }

  // i must be below the precision: coefficients past it are unknown
  Rational coefficient(int i) const;

  // index of the lowest nonzero stored coefficient; equals precision() when
  // the series vanishes modulo the precision
  int valuation() const;

  bool is_zero() const;          // zero modulo the precision
  bool is_unit() const { return !coefficient(0).is_zero(); }

  TruncatedSeries truncated(int p) const;
  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries invert() const;         // needs a unit
  TruncatedSeries shifted_up(int k) const;    // times mu^k, precision grows by k
  TruncatedSeries shifted_down(int k) const;  // exact division by mu^k

  // substitute g (valuation >= 1) for the variable
  TruncatedSeries compose(const TruncatedSeries& g) const;

  // agreement of all coefficients below p (p must not exceed either precision)
  friend bool equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, int p);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.prec_ == b.prec_ && a.c_ == b.c_;
  }

  std::string str(const std::string& var = "mu") const;

 private:
  void trim();
  int prec_;
  std::vector<Rational> c_;
};

inline TruncatedSeries inv(const TruncatedSeries& s) { return s.invert(); }

inline bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }

// Whether every coefficient of p is known to order at least k and vanishes
// modulo mu^k. Trailing coefficients dropped by polynomial normalization
// were zero modulo their own precision, so they never weaken the claim when
// that precision is at least k.
inline bool vanishes_mod(const Polynomial<TruncatedSeries>& p, int k) {
  for (int r = 0; r <= p.degree(); ++r) {
    TruncatedSeries c = p.coeff(r);
    if (c.precision() < k || c.valuation() < k) return false;
  }
  return true;
}

}  // namespace hurwitz
