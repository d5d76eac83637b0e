#include "hurwitz/deform.hpp"

#include <algorithm>
#include <utility>

#include "hurwitz/degenerate.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/linalg.hpp"

namespace hurwitz {

namespace {

using S = TruncatedSeries;
using PS = Polynomial<S>;
using PM = Polynomial<MultiPoly>;

void check_n(int n) {
  if (n < 6 || n % 2 != 0)
    throw invalid_parameter("family degree must be even and at least 6, got " +
                            std::to_string(n));
}

// unknown indices shared by the multivariate system and the lift
struct Layout {
  int n, half;
  int a(int i) const { return i; }
  int b0() const { return half; }
  int b1() const { return half + 1; }
  int g() const { return half + 2; }
  int d(int k) const { return half + 3 + k; }
  int h(int l) const { return half + n + l; }
  int lam() const { return 2 * n - 1; }
  int mu() const { return 2 * n; }
  int count() const { return 2 * n; }
};

// reinterpret the known coefficients as an exact polynomial representative
S as_exact(const S& s) {
  if (s.exact()) return s;
  int p = s.precision();
  std::vector<Rational> c(p);
  for (int i = 0; i < p; ++i) c[i] = s.coefficient(i);
  return S(std::move(c), S::kExact);
}

PS cube_at_one_series() {
  PS shift{std::vector<S>{S(-1), S(1)}};
  return shift * shift * shift;
}

// A in the upper chart: alpha_i = mu^{n/2-i} a_i stays explicit
PS upper_a(const std::vector<S>& u, const Layout& ly, int p) {
  std::vector<S> c(ly.half + 1);
  for (int i = 0; i < ly.half; ++i)
    c[i] = u[ly.a(i)].shifted_up(ly.half - i).truncated(p);
  c[ly.half] = S(1);
  return PS(std::move(c));
}

PS lower_a(const std::vector<S>& u, const Layout& ly, int p) {
  std::vector<S> c(ly.half + 1);
  for (int i = 0; i < ly.half; ++i) c[i] = u[ly.a(i)].truncated(p);
  c[ly.half] = S(1);
  return PS(std::move(c));
}

PS lower_h(const std::vector<S>& u, const Layout& ly, int p) {
  std::vector<S> c(ly.half);
  for (int l = 0; l + 1 < ly.half; ++l) c[l] = u[ly.h(l)].truncated(p);
  c[ly.half - 1] = S(1);
  return PS(std::move(c));
}

PS upper_b(const std::vector<S>& u, const Layout& ly, int p) {
  std::vector<S> c(ly.n - 2);
  for (int k = 0; k <= ly.n - 4; ++k) c[k] = u[ly.d(k)].truncated(p);
  c[ly.n - 3] = S(1);
  return PS(std::move(c));
}

// beta0 + beta1 mu Y + mu^2 Y^2, the image of the upper quadratic downstairs
PS lower_quad(const std::vector<S>& u, const Layout& ly, int p) {
  S mu = S::variable().truncated(p + 2);
  return PS(std::vector<S>{u[ly.b0()].truncated(p),
                           (u[ly.b1()].truncated(p) * mu).truncated(p + 1),
                           (mu * mu).truncated(p + 2)});
}

// residuals of both charts mod mu^p, in equation order
std::vector<S> residuals(const std::vector<S>& u, const Layout& ly, int p) {
  int n = ly.n;
  PS q{std::vector<S>{u[ly.b0()].truncated(p), u[ly.b1()].truncated(p), S(1)}};
  PS a = upper_a(u, ly, p);
  PS r1 = a * a - cube_at_one_series() * upper_b(u, ly, p) -
          PS(u[ly.g()].truncated(p)) * q;
  PS at = lower_a(u, ly, p);
  PS ht = lower_h(u, ly, p);
  PS yy1{std::vector<S>{S(0), S(-1), S(1)}};
  PS r2 = at * at - yy1 * (ht * ht) -
          PS((u[ly.lam()].truncated(p) * u[ly.g()].truncated(p)).truncated(p)) *
              lower_quad(u, ly, p);
  if (r1.degree() >= n || r2.degree() >= n)
    throw verification_failure("residual degree exceeds n - 1");
  std::vector<S> out(2 * n);
  for (int r = 0; r < n; ++r) {
    out[r] = r1.coeff(r).truncated(p);
    out[n + r] = r2.coeff(r).truncated(p);
  }
  return out;
}

// partial derivatives of the residuals at u, mod mu^q
std::vector<std::vector<S>> jacobian(const std::vector<S>& u, const Layout& ly, int q) {
  int n = ly.n;
  std::vector<std::vector<S>> M(2 * n, std::vector<S>(2 * n));
  auto put_poly = [&](int row0, int col, const PS& p) {
    for (int r = 0; r < n; ++r) M[row0 + r][col] = p.coeff(r).truncated(q);
  };
  S mu = S::variable().truncated(q + 2);
  S gam = u[ly.g()].truncated(q);
  S lam = u[ly.lam()].truncated(q);
  S b0 = u[ly.b0()].truncated(q);
  S b1 = u[ly.b1()].truncated(q);

  // upper chart rows 0..n-1
  PS a = upper_a(u, ly, q);
  for (int i = 0; i < ly.half; ++i) {
    PS col = PS(S::monomial(ly.half - i, Rational(2)).truncated(q + ly.half)) *
             a.shifted(i);
    put_poly(0, ly.a(i), col);
  }
  M[0][ly.b0()] = (-gam).truncated(q);
  M[1][ly.b1()] = (-gam).truncated(q);
  M[0][ly.g()] = (-b0).truncated(q);
  M[1][ly.g()] = (-b1).truncated(q);
  M[2][ly.g()] = S(-1).truncated(q);
  PS cube = cube_at_one_series();
  for (int k = 0; k <= n - 4; ++k)
    for (int j = 0; j <= 3; ++j)
      M[k + j][ly.d(k)] = (-cube.coeff(j)).truncated(q);

  // lower chart rows n..2n-1
  PS at = lower_a(u, ly, q);
  PS ht = lower_h(u, ly, q);
  PS yy1{std::vector<S>{S(0), S(-1), S(1)}};
  for (int i = 0; i < ly.half; ++i) put_poly(n, ly.a(i), PS(S(2)) * at.shifted(i));
  for (int l = 0; l + 1 < ly.half; ++l)
    put_poly(n, ly.h(l), PS(S(-2)) * yy1 * ht.shifted(l));
  S lg = (lam * gam).truncated(q);
  M[n + 0][ly.b0()] = (-lg).truncated(q);
  M[n + 1][ly.b1()] = (-(lg * mu)).truncated(q);
  M[n + 0][ly.g()] = (-(lam * b0)).truncated(q);
  M[n + 1][ly.g()] = (-(lam * b1 * mu)).truncated(q);
  M[n + 2][ly.g()] = (-(lam * mu * mu)).truncated(q);
  M[n + 0][ly.lam()] = (-(gam * b0)).truncated(q);
  M[n + 1][ly.lam()] = (-(gam * b1 * mu)).truncated(q);
  M[n + 2][ly.lam()] = (-(gam * mu * mu)).truncated(q);
  return M;
}

// in-place elimination with unit pivots; everything lives mod mu^q
std::vector<S> solve_series(std::vector<std::vector<S>> M, std::vector<S> b, int q) {
  int m = static_cast<int>(M.size());
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (M[r][col].truncated(q).is_unit()) {
        piv = r;
        break;
      }
    if (piv < 0)
      throw singular_jacobian("no unit pivot in series elimination at column " +
                                  std::to_string(col),
                              {});
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    S pinv = M[col][col].truncated(q).invert();
    for (int j = col; j < m; ++j)
      if (!M[col][j].is_zero()) M[col][j] = (M[col][j] * pinv).truncated(q);
    b[col] = (b[col] * pinv).truncated(q);
    for (int r = col + 1; r < m; ++r) {
      S f = M[r][col].truncated(q);
      if (f.is_zero()) continue;
      for (int j = col + 1; j < m; ++j)
        if (!M[col][j].is_zero()) M[r][j] = (M[r][j] - f * M[col][j]).truncated(q);
      M[r][col] = S(0);
      b[r] = (b[r] - f * b[col]).truncated(q);
    }
  }
  for (int col = m - 1; col >= 0; --col) {
    S x = b[col].truncated(q);
    for (int j = col + 1; j < m; ++j)
      if (!M[col][j].is_zero() && !b[j].is_zero())
        x = (x - M[col][j] * b[j]).truncated(q);
    b[col] = x;
  }
  return b;
}

}  // namespace

DeformationSystem build_system(int n) {
  check_n(n);
  Layout ly{n, n / 2};
  auto V = [](int i) { return MultiPoly::variable(i); };

  std::vector<MultiPoly> ca(ly.half + 1);
  for (int i = 0; i < ly.half; ++i) ca[i] = V(ly.a(i));
  ca[ly.half] = MultiPoly(1);
  PM A{std::move(ca)};

  std::vector<MultiPoly> cb(n - 2);
  for (int k = 0; k <= n - 4; ++k) cb[k] = V(ly.d(k));
  cb[n - 3] = MultiPoly(1);
  PM B{std::move(cb)};

  std::vector<MultiPoly> ch(ly.half);
  for (int l = 0; l + 1 < ly.half; ++l) ch[l] = V(ly.h(l));
  ch[ly.half - 1] = MultiPoly(1);
  PM H{std::move(ch)};

  PM q{std::vector<MultiPoly>{V(ly.b0()), V(ly.b1()), MultiPoly(1)}};
  PM shift{std::vector<MultiPoly>{MultiPoly(-1), MultiPoly(1)}};
  PM lower{std::vector<MultiPoly>{MultiPoly(0), -V(ly.mu()), MultiPoly(1)}};

  PM e1 = A * A - shift * shift * shift * B - PM(V(ly.g())) * q;
  PM e2 = A * A - lower * (H * H) - PM(V(ly.lam()) * V(ly.g())) * q;
  if (e1.degree() >= n || e2.degree() >= n)
    throw verification_failure("identity degree exceeds n - 1");

  DeformationSystem sys;
  sys.n = n;
  sys.equations.reserve(2 * n);
  for (int r = 0; r < n; ++r) sys.equations.push_back(e1.coeff(r));
  for (int r = 0; r < n; ++r) sys.equations.push_back(e2.coeff(r));
  for (int i = 0; i < ly.half; ++i)
    sys.unknown_names.push_back("alpha" + std::to_string(i));
  sys.unknown_names.push_back("beta0");
  sys.unknown_names.push_back("beta1");
  sys.unknown_names.push_back("gamma");
  for (int k = 0; k <= n - 4; ++k)
    sys.unknown_names.push_back("delta" + std::to_string(k));
  for (int l = 0; l + 1 < ly.half; ++l)
    sys.unknown_names.push_back("eta" + std::to_string(l));
  sys.unknown_names.push_back("lambda");
  return sys;
}

std::vector<Rational> DeformationSystem::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != unknown_count() + 1)
    throw invalid_parameter("expected " + std::to_string(unknown_count() + 1) +
                            " values (unknowns then mu), got " +
                            std::to_string(point.size()));
  std::vector<Rational> out;
  out.reserve(equations.size());
  for (const auto& e : equations) out.push_back(e.eval(point));
  return out;
}

DeformationState newton_lift(int n, int precision) {
  check_n(n);
  if (precision < 1) throw invalid_parameter("precision must be positive");
  Layout ly{n, n / 2};

  CoverModel<Rational> m0 = initial_coefficients(n);
  ChebyshevFactors cf = chebyshev_factors(n);
  std::vector<S> u(ly.count());
  for (int i = 0; i < ly.half; ++i) u[ly.a(i)] = S(cf.a0.coeff(i));
  u[ly.b0()] = S(m0.beta0);
  u[ly.b1()] = S(m0.beta1);
  u[ly.g()] = S(m0.gamma);
  for (int k = 0; k <= n - 4; ++k) u[ly.d(k)] = S(m0.delta[k]);
  for (int l = 0; l + 1 < ly.half; ++l) u[ly.h(l)] = S(cf.h0.coeff(l));
  u[ly.lam()] = S(cf.lambda_lead);

  // the branch is unique precisely because this matrix is invertible
  auto Jc = jacobian(u, ly, 1);
  std::vector<std::vector<Rational>> J0(2 * n, std::vector<Rational>(2 * n));
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) J0[r][c] = Jc[r][c].truncated(1).coefficient(0);
  auto kernel = kernel_basis(J0);
  if (!kernel.empty()) {
    std::vector<std::vector<std::string>> ks;
    for (const auto& v : kernel) {
      std::vector<std::string> row;
      for (const auto& x : v) row.push_back(x.str());
      ks.push_back(std::move(row));
    }
    throw singular_jacobian("constant Jacobian of the rescaled system is singular",
                            std::move(ks));
  }

  int m = 1;
  while (m < precision) {
    int p = std::min(2 * m, precision);
    auto R = residuals(u, ly, p);
    std::vector<S> rhs(R.size());
    for (size_t k = 0; k < R.size(); ++k) {
      if (R[k].valuation() < m)
        throw verification_failure("correction lost contact with the branch");
      rhs[k] = (-R[k]).shifted_down(m).truncated(p - m);
    }
    auto J = jacobian(u, ly, p - m);
    auto delta = solve_series(std::move(J), std::move(rhs), p - m);
    for (int j = 0; j < ly.count(); ++j)
      u[j] = u[j] + as_exact(delta[j].shifted_up(m));
    m = p;
  }

  DeformationState st;
  st.n = n;
  st.precision = precision;
  auto& mod = st.model;
  mod.n = n;
  mod.alpha.resize(ly.half);
  for (int i = 0; i < ly.half; ++i)
    mod.alpha[i] = u[ly.a(i)].shifted_up(ly.half - i).truncated(precision);
  mod.beta0 = u[ly.b0()].truncated(precision);
  mod.beta1 = u[ly.b1()].truncated(precision);
  mod.gamma = u[ly.g()].truncated(precision);
  mod.delta.resize(n - 3);
  for (int k = 0; k <= n - 4; ++k) mod.delta[k] = u[ly.d(k)].truncated(precision);
  mod.epsilon0 = S::variable();
  mod.eta.resize(ly.half - 1);
  for (int l = 0; l + 1 < ly.half; ++l)
    mod.eta[l] = u[ly.h(l)].shifted_up(ly.half - 1 - l).truncated(precision);
  mod.lambda = u[ly.lam()].shifted_up(n).truncated(precision);

  if (!vanishes_mod(mod.residual_at_one(), precision) ||
      !vanishes_mod(mod.residual_at_lambda(), precision))
    throw verification_failure("lifted residuals do not vanish to the working precision");
  if (mod.lambda.valuation() != std::min(n, precision))
    throw verification_failure("multiplier valuation is not the family degree");
  return st;
}

}  // namespace hurwitz
