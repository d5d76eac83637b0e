#include "hurwitz/latex_out.hpp"

#include <utility>
#include <vector>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

using PQ = Polynomial<Rational>;

std::string power(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^{" + std::to_string(k) + "}";
}

// integer (or at least sign-normalized) polynomial, highest power first
std::string int_poly(const PQ& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    Rational a = abs(c);
    if (!(a == Rational(1)) || i == 0) out += latex(a);
    out += power(var, i);
  }
  return out;
}

// f = sign * body with integer-cleared numerator and denominator
std::pair<int, std::string> signed_fraction(const RationalFunction& f, const std::string& var) {
  if (f.is_zero()) return {0, "0"};
  PQ pn = primitive_part(f.numerator());
  PQ pd = primitive_part(f.denominator());
  Rational c = content(f.numerator()) / content(f.denominator());
  int sign = c.sign();
  Rational a = abs(c);
  PQ num = PQ(Rational(a.numerator())) * pn;
  PQ den = PQ(Rational(a.denominator())) * pd;
  if (den == PQ(Rational(1))) return {sign, int_poly(num, var)};
  return {sign, "\\frac{" + int_poly(num, var) + "}{" + int_poly(den, var) + "}"};
}

bool is_plain_sum(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

}  // namespace

std::string latex(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().get_str();
  std::string sign = r.sign() < 0 ? "-" : "";
  Rational a = abs(r);
  return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex(const RationalFunction& f, const std::string& var) {
  auto [sign, body] = signed_fraction(f, var);
  return sign < 0 ? "-" + body : body;
}

std::string latex(const Polynomial<RationalFunction>& p, const std::string& var,
                  const std::string& par) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    RationalFunction c = p.coeff(i);
    if (c.is_zero()) continue;
    auto [sign, body] = signed_fraction(c, par);
    if (!out.empty()) out += sign < 0 ? " - " : " + ";
    else if (sign < 0) out += "-";
    if (i == 0) {
      out += body;
      continue;
    }
    if (body == "1") {
      out += power(var, i);
    } else if (body.rfind("\\frac", 0) == 0) {
      out += body + power(var, i);
    } else if (is_plain_sum(body)) {
      out += "\\left(" + body + "\\right)" + power(var, i);
    } else {
      out += body + power(var, i);
    }
  }
  return out;
}

std::string latex_factored(const RationalFunction& f, const std::string& var) {
  if (f.is_zero()) return "0";
  auto factored = [&](const PQ& p) {
    Rational scale(1);
    std::string body;
    auto parts = yun_decomposition(p);
    scale *= p.leading();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() == 0) continue;
      PQ q = primitive_part(parts[i]);
      // parts are monic: the content carries the scaling onto the constant
      Rational c = content(parts[i]);
      for (std::size_t k = 0; k <= i; ++k) scale *= c;
      std::string factor = "(" + int_poly(q, var) + ")";
      if (i > 0) factor += "^{" + std::to_string(static_cast<int>(i) + 1) + "}";
      body += factor;
    }
    return std::pair<Rational, std::string>{scale, body};
  };
  auto [cn, num] = factored(f.numerator());
  auto [cd, den] = factored(f.denominator());
  Rational c = cn / cd;
  std::string prefix = c.sign() < 0 ? "-" : "";
  Rational a = abs(c);
  // fold the scalar into the fraction: 3(..)^3 / 256(..)
  std::string top = (a.numerator() == 1 ? "" : a.numerator().get_str()) + num;
  std::string bot = (a.denominator() == 1 ? "" : a.denominator().get_str()) + den;
  if (top.empty()) top = "1";
  if (bot.empty()) return prefix + top;
  return prefix + "\\frac{" + top + "}{" + bot + "}";
}

std::string latex_model(const NormalizedModel<RationalFunction>& m) {
  const std::string g = latex_factored(m.gamma);
  const std::string quad = latex(m.quadratic());
  const std::string den = g + "\\left(" + quad + "\\right)";
  const std::string map = "S_{" + std::to_string(m.n) + "}(T, X)";
  const std::string h = "H_{" + std::to_string(m.n) + "}(T)";
  std::string out = "\\begin{aligned}\n";
  out += map + " &= \\frac{\\left(" + latex(m.a) + "\\right)^2}{" + den + "} \\\\\n";
  out += map + " - 1 &= \\frac{(X-1)^3\\left(" + latex(m.b) + "\\right)}{" + den + "} \\\\\n";
  out += map + " - " + h + " &= \\frac{\\left(" + latex(m.lower_quadratic()) +
         "\\right)\\left(" + latex(m.h) + "\\right)^2}{" + den + "}\n";
  out += "\\end{aligned}\n";
  out += h + " = " + latex_factored(m.lambda) + " \\qquad " + h + " - 1 = " +
         latex_factored(m.lambda - RationalFunction(1)) + "\n";
  return out;
}

}  // namespace hurwitz
