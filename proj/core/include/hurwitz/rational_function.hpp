#pragma once

#include <string>
#include <utility>

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Element of Q(T): a reduced fraction of polynomials with monic denominator.
// Zero is represented as 0/1. All constructors and operators maintain the
// canonical form, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial<Rational> num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial<Rational> num, Polynomial<Rational> den);

  static RationalFunction variable() {
    return RationalFunction(Polynomial<Rational>::variable());
  }

  const Polynomial<Rational>& numerator() const { return num_; }
  const Polynomial<Rational>& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // degree as a map P1 -> P1
  int map_degree() const { return std::max(num_.degree(), den_.degree()); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;

  Rational eval(const Rational& t) const;  // throws parameter_at_pole at poles
  RationalFunction compose(const RationalFunction& g) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var = "T") const;

 private:
  void reduce();
  Polynomial<Rational> num_, den_;
};

inline RationalFunction inv(const RationalFunction& f) { return f.inverse(); }

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace hurwitz
