#pragma once

#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// Coefficient data for one member of the degree-n family, written over a
// coefficient domain K (exact rationals for the starting member, truncated
// series during lifting, rational functions of the parameter after
// algebraization).
//
// The cover is x = S_0 / S_inf with
//   S_0      = A^2,                      A = X^{n/2} + sum_i alpha[i] X^i
//   S_inf    = gamma (X^2 + beta1 X + beta0)
//   S_1      = (X-1)^3 B,                B = X^{n-3} + sum_k delta[k] X^k
//   S_lambda = X (X - epsilon0) H^2,     H = X^{n/2-1} + sum_l eta[l] X^l
// subject to the two polynomial identities
//   S_0 - S_1 - S_inf = 0   and   S_0 - S_lambda - lambda S_inf = 0.
template <class K>
struct CoverModel {
  int n = 0;
  std::vector<K> alpha;  // n/2 entries, indices 0..n/2-1
  K beta0{};
  K beta1{};
  K gamma{};
  std::vector<K> delta;  // n-3 entries, indices 0..n-4
  K epsilon0{};
  std::vector<K> eta;  // n/2-1 entries, indices 0..n/2-2
  K lambda{};

  Polynomial<K> factor_a() const { return monic_from(alpha, n / 2); }
  Polynomial<K> factor_b() const { return monic_from(delta, n - 3); }
  Polynomial<K> factor_h() const { return monic_from(eta, n / 2 - 1); }

  Polynomial<K> quadratic() const {
    return Polynomial<K>(std::vector<K>{beta0, beta1, K(1)});
  }

  Polynomial<K> s0() const {
    auto a = factor_a();
    return a * a;
  }
  Polynomial<K> s_inf() const { return Polynomial<K>(gamma) * quadratic(); }
  Polynomial<K> s1() const {
    Polynomial<K> shift{std::vector<K>{K(-1), K(1)}};
    return shift * shift * shift * factor_b();
  }
  Polynomial<K> s_lambda() const {
    Polynomial<K> lower{std::vector<K>{K(), -epsilon0, K(1)}};
    auto h = factor_h();
    return lower * h * h;
  }

  Polynomial<K> residual_at_one() const { return s0() - s1() - s_inf(); }
  Polynomial<K> residual_at_lambda() const {
    return s0() - s_lambda() - Polynomial<K>(lambda) * s_inf();
  }

 private:
  static Polynomial<K> monic_from(const std::vector<K>& low, int deg) {
    std::vector<K> c(low);
    c.resize(deg + 1);
    c[deg] = K(1);
    return Polynomial<K>(std::move(c));
  }
};

// The same data after the affine change of coordinates that kills the
// subleading coefficient of A while keeping X = 1 fixed. The quadratic below
// the second identity is no longer X(X - epsilon0); it becomes a general
// monic quadratic X^2 + q1 X + q0.
template <class K>
struct NormalizedModel {
  int n = 0;
  Polynomial<K> a;  // monic, degree n/2, subleading coefficient zero
  K beta0{};
  K beta1{};
  K gamma{};
  Polynomial<K> b;  // monic, degree n-3
  K q0{};
  K q1{};
  Polynomial<K> h;  // monic, degree n/2-1
  K lambda{};

  Polynomial<K> quadratic() const {
    return Polynomial<K>(std::vector<K>{beta0, beta1, K(1)});
  }
  Polynomial<K> lower_quadratic() const {
    return Polynomial<K>(std::vector<K>{q0, q1, K(1)});
  }

  Polynomial<K> s0() const { return a * a; }
  Polynomial<K> s_inf() const { return Polynomial<K>(gamma) * quadratic(); }
  Polynomial<K> s1() const {
    Polynomial<K> shift{std::vector<K>{K(-1), K(1)}};
    return shift * shift * shift * b;
  }
  Polynomial<K> s_lambda() const { return lower_quadratic() * h * h; }

  Polynomial<K> residual_at_one() const { return s0() - s1() - s_inf(); }
  Polynomial<K> residual_at_lambda() const {
    return s0() - s_lambda() - Polynomial<K>(lambda) * s_inf();
  }
};

}  // namespace hurwitz
