#include "hurwitz/sturm.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {
// rescale by a positive constant so coefficients are coprime integers
Polynomial<Rational> positive_primitive(const Polynomial<Rational>& p) {
  if (p.is_zero()) return p;
  Rational c = abs(content(p));
  std::vector<Rational> v(p.coeffs());
  for (auto& x : v) x /= c;
  return Polynomial<Rational>(std::move(v));
}
}  // namespace

std::vector<Polynomial<Rational>> sturm_chain(const Polynomial<Rational>& p) {
  if (p.is_zero()) throw invalid_parameter("sturm chain of the zero polynomial");
  std::vector<Polynomial<Rational>> chain;
  Polynomial<Rational> p0 = positive_primitive(squarefree_part(p));
  chain.push_back(p0);
  if (p0.degree() == 0) return chain;
  Polynomial<Rational> p1 = positive_primitive(p0.derivative());
  chain.push_back(p1);
  while (chain.back().degree() > 0) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    auto r = divrem(a, b).second;
    if (r.is_zero()) throw error("sturm chain hit a repeated factor after squarefree reduction");
    chain.push_back(positive_primitive(-r));
  }
  return chain;
}

int sign_variations_at(const std::vector<Polynomial<Rational>>& chain,
                       const std::optional<Rational>& x, int infinity_sign) {
  int variations = 0;
  int prev = 0;
  for (const auto& f : chain) {
    int s;
    if (x.has_value()) {
      s = f.eval(*x).sign();
    } else {
      s = f.leading().sign();
      if (infinity_sign < 0 && f.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int sturm_count(const Polynomial<Rational>& p,
                     const std::optional<Rational>& a,
                     const std::optional<Rational>& b) {
  if (p.is_zero()) throw invalid_parameter("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  if (a.has_value() && b.has_value() && !(*a < *b))
    throw invalid_parameter("empty root counting interval");
  auto chain = sturm_chain(p);
  int va = sign_variations_at(chain, a, -1);
  int vb = sign_variations_at(chain, b, +1);
  return va - vb;
}

}  // namespace hurwitz
