#include "hurwitz/series.hpp"

#include <algorithm>

namespace hurwitz {

namespace {
int add_prec(int p, int k) {
  if (p >= TruncatedSeries::kExact) return TruncatedSeries::kExact;
  return std::min(p + k, static_cast<int>(TruncatedSeries::kExact));
}
}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int prec)
    : prec_(prec), c_(std::move(coeffs)) {
  if (prec_ <= 0) throw precision_mismatch("series precision must be positive");
  if (static_cast<int>(c_.size()) > prec_ && prec_ != kExact)
    c_.resize(prec_);
  trim();
}

TruncatedSeries TruncatedSeries::variable() { return monomial(1); }

TruncatedSeries TruncatedSeries::monomial(int k, Rational c) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return TruncatedSeries(std::move(v), kExact);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial<Rational>& p) {
  return TruncatedSeries(p.coeffs(), kExact);
}

void TruncatedSeries::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational TruncatedSeries::coefficient(int i) const {
  if (i < 0) throw precision_mismatch("negative series index");
  if (i >= prec_)
    throw precision_mismatch("coefficient " + std::to_string(i) +
                             " requested beyond precision " + std::to_string(prec_));
  if (i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

int TruncatedSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return prec_;
}

bool TruncatedSeries::is_zero() const { return c_.empty(); }

TruncatedSeries TruncatedSeries::truncated(int p) const {
  if (p >= prec_) return *this;
  std::vector<Rational> v(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), p));
  return TruncatedSeries(std::move(v), p);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  int p = std::min(prec_, o.prec_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  prec_ = p;
  if (static_cast<int>(c_.size()) > prec_ && prec_ != kExact) c_.resize(prec_);
  trim();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  return *this += -o;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.c_.empty() || b.c_.empty()) {
    // product of something zero (mod its precision): precision of the result
    // still improves by the other factor's valuation
    int p = std::min(add_prec(a.prec_, b.valuation()), add_prec(b.prec_, a.valuation()));
    return TruncatedSeries({}, p);
  }
  int va = a.valuation(), vb = b.valuation();
  int p = std::min(add_prec(a.prec_, vb), add_prec(b.prec_, va));
  size_t bound = std::min<size_t>(a.c_.size() + b.c_.size() - 1, p == TruncatedSeries::kExact ? a.c_.size() + b.c_.size() - 1 : static_cast<size_t>(p));
  std::vector<Rational> c(bound);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size() && i + j < bound; ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  }
  return TruncatedSeries(std::move(c), p);
}

TruncatedSeries TruncatedSeries::invert() const {
  if (!is_unit()) throw division_by_zero("series inverse of a non unit");
  if (prec_ == kExact && c_.size() == 1) return TruncatedSeries(inv(c_[0]));
  if (prec_ == kExact)
    throw precision_mismatch("inverse of a non constant exact series needs a finite truncation");
  Rational c0 = inv(c_[0]);
  std::vector<Rational> r(prec_);
  r[0] = c0;
  for (int k = 1; k < prec_; ++k) {
    Rational s(0);
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
      s += c_[j] * r[k - j];
    r[k] = -s * c0;
  }
  return TruncatedSeries(std::move(r), prec_);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.is_zero()) throw division_by_zero("series division by zero");
  int v = b.valuation();
  if (v == 0) return a * b.invert();
  return a.shifted_down(v) * b.shifted_down(v).invert();
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
  if (k == 0) return *this;
  if (k < 0) throw error("negative series shift");
  std::vector<Rational> v(c_.size() + k);
  for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return TruncatedSeries(std::move(v), add_prec(prec_, k));
}

TruncatedSeries TruncatedSeries::shifted_down(int k) const {
  if (k == 0) return *this;
  if (k < 0) throw error("negative series shift");
  for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
    if (!c_[i].is_zero())
      throw nonzero_remainder("series not divisible by mu^" + std::to_string(k));
  std::vector<Rational> v;
  if (static_cast<int>(c_.size()) > k)
    v.assign(c_.begin() + k, c_.end());
  int p = prec_ == kExact ? kExact : prec_ - k;
  if (p <= 0) throw precision_mismatch("series shift below precision");
  return TruncatedSeries(std::move(v), p);
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  if (!g.is_zero() && g.valuation() < 1)
    throw error("series composition needs valuation at least one");
  int vg = std::max(1, g.is_zero() ? g.prec_ : g.valuation());
  long fp = prec_ == kExact ? static_cast<long>(kExact)
                            : static_cast<long>(prec_) * vg;
  int p = static_cast<int>(std::min<long>(g.prec_, std::min<long>(fp, kExact)));
  if (prec_ == kExact && g.prec_ == kExact) p = kExact;
  TruncatedSeries r;
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * g + TruncatedSeries(c_[i]);
    if (p != kExact) r = r.truncated(p);
  }
  if (p != kExact) r = r.truncated(p);
  return r;
}

bool equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, int p) {
  if (p > a.prec_ || p > b.prec_)
    throw precision_mismatch("comparison beyond available precision");
  for (int i = 0; i < p; ++i)
    if (a.coefficient(i) != b.coefficient(i)) return false;
  return true;
}

std::string TruncatedSeries::str(const std::string& var) const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].str();
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  if (prec_ != kExact) out += " + O(" + var + "^" + std::to_string(prec_) + ")";
  return out;
}

}  // namespace hurwitz
