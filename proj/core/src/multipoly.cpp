#include "hurwitz/multipoly.hpp"

#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

MultiPoly MultiPoly::variable(int index, int exponent) {
  if (index < 0 || exponent < 0) throw invalid_parameter("bad variable or exponent");
  MultiPoly p;
  if (exponent == 0)
    p.terms_[{}] = Rational(1);
  else
    p.terms_[{{index, exponent}}] = Rational(1);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int variable) const {
  int d = 0;
  for (const auto& [key, c] : terms_)
    for (const auto& [v, e] : key)
      if (v == variable && e > d) d = e;
  return d;
}

void MultiPoly::add_term(const Exponents& key, const Rational& c) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // merge the two sorted exponent lists
      MultiPoly::Exponents key;
      size_t i = 0, j = 0;
      while (i < ka.size() || j < kb.size()) {
        if (j == kb.size() || (i < ka.size() && ka[i].first < kb[j].first))
          key.push_back(ka[i++]);
        else if (i == ka.size() || kb[j].first < ka[i].first)
          key.push_back(kb[j++]);
        else {
          key.emplace_back(ka[i].first, ka[i].second + kb[j].second);
          ++i;
          ++j;
        }
      }
      r.add_term(key, ca * cb);
    }
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& values) const {
  Rational total(0);
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : key) {
      if (v >= static_cast<int>(values.size()))
        throw invalid_parameter("missing value for variable " + std::to_string(v));
      Rational p(1);
      for (int k = 0; k < e; ++k) p *= values[v];
      term *= p;
    }
    total += term;
  }
  return total;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (const auto& [v, e] : key) {
      os << "*" << (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace hurwitz
