#include "hurwitz/rational_function.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

RationalFunction::RationalFunction(Polynomial<Rational> num, Polynomial<Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial<Rational>(1);
    return;
  }
  auto g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational lc = den_.leading();
  if (!lc.is_one()) {
    Rational s = inv(lc);
    num_ = s * num_;
    den_ = s * den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw division_by_zero("inverting the zero rational function");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (d.is_zero()) throw parameter_at_pole("evaluation at a pole: t = " + t.str());
  return num_.eval(t) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  // clear denominators: (num/den)(g) with g = p/q becomes a fraction whose
  // parts are homogenized evaluations of num and den at (p, q)
  int d = std::max(num_.degree(), den_.degree());
  if (d <= 0) return *this;
  const auto& p = g.numerator();
  const auto& q = g.denominator();
  Polynomial<Rational> np, dp;
  Polynomial<Rational> qpow(1);
  std::vector<Polynomial<Rational>> qpowers(d + 1);
  qpowers[0] = Polynomial<Rational>(1);
  for (int i = 1; i <= d; ++i) qpowers[i] = qpowers[i - 1] * q;
  Polynomial<Rational> ppow(1);
  for (int i = 0; i <= d; ++i) {
    if (!num_.coeff(i).is_zero()) np += Polynomial<Rational>(num_.coeff(i)) * ppow * qpowers[d - i];
    if (!den_.coeff(i).is_zero()) dp += Polynomial<Rational>(den_.coeff(i)) * ppow * qpowers[d - i];
    if (i < d) ppow *= p;
  }
  return RationalFunction(np, dp);
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return poly_to_string(num_, var);
  return "(" + poly_to_string(num_, var) + ") / (" + poly_to_string(den_, var) + ")";
}

}  // namespace hurwitz
