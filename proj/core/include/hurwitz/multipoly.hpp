#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Sparse multivariate polynomial over Q. Variables are nonnegative indices;
// a term key lists (variable, exponent) pairs sorted by variable with all
// exponents positive, so the zero-variable key is the constant term.
class MultiPoly {
 public:
  using Exponents = std::vector<std::pair<int, int>>;

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT: implicit by design
  MultiPoly(const Rational& c) {                 // NOLINT: implicit by design
    if (!c.is_zero()) terms_[{}] = c;
  }

  static MultiPoly variable(int index, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  // coefficient of the given (sorted, positive-exponent) monomial key
  Rational coefficient(const Exponents& key) const;
  int degree_in(int variable) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // values indexed by variable; every variable occurring must be covered
  Rational eval(const std::vector<Rational>& values) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& key, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace hurwitz
