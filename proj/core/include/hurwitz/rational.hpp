#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "hurwitz/error.hpp"

namespace hurwitz {

// Arbitrary precision rational, always reduced with positive denominator.
// Thin wrapper over mpq_class that enforces canonical form at every entry
// point and throws instead of dividing by zero.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars embed
  Rational(long num, long den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // parses "p", "-p", "p/q"
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
      throw invalid_parameter("cannot parse rational: '" + s + "'");
    if (v.get_den() == 0) throw division_by_zero("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational inv(const Rational& a) {
  if (a.is_zero()) throw division_by_zero("inverting zero");
  return Rational(1) / a;
}

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

inline bool is_zero(const Rational& a) { return a.is_zero(); }

}  // namespace hurwitz
