#include "hurwitz/descent.hpp"

#include "hurwitz/group_order.hpp"

namespace hurwitz {

DescentVerdict descent_check(const NielsenTuple& t) {
  if (t.sigma.size() != 4) throw invalid_parameter("tuple must have four coordinates");
  const Permutation& s1 = t.sigma[0];
  const Permutation& s2 = t.sigma[1];
  const Permutation& s3 = t.sigma[2];
  const Permutation& s4 = t.sigma[3];

  Permutation tau = compose(s4.inverse(), s4.inverse());
  bool ok = compose(tau, tau).is_identity();
  // mirror relations; the one defining tau holds by construction
  ok = ok && compose(compose(s4, s1.inverse()), s4.inverse()) == compose(tau, s1);
  ok = ok && s3.inverse() == compose(tau, s3);
  ok = ok && compose(compose(s3.inverse(), s2.inverse()), s3) == compose(tau, s2);

  DescentVerdict v;
  v.defined_over_R = ok;
  if (ok) {
    v.tau = tau;
    v.totally_real = tau.is_identity();
  }
  return v;
}

std::vector<ClassLabel> find_totally_real_classes(int n) {
  std::vector<ClassLabel> out;
  for (const auto& [label, t] : enumerate_sni(n))
    if (descent_check(t).totally_real) out.push_back(label);
  return out;
}

AnLiftReport an_product(const NielsenTuple& t) {
  if (t.sigma.size() != 4) throw invalid_parameter("tuple must have four coordinates");
  const int n = t.n();
  AnLiftReport rep;
  for (const auto& s : t.sigma) {
    rep.parities.push_back(s.parity());
    std::vector<int> img(2 * n);
    bool swap_sheets = s.parity() < 0;
    for (int x = 1; x <= n; ++x) {
      int y = s.apply(x);
      if (swap_sheets) {
        img[x - 1] = y + n;
        img[x + n - 1] = y;
      } else {
        img[x - 1] = y;
        img[x + n - 1] = y + n;
      }
    }
    rep.lifted.push_back(Permutation::from_images(img));
  }
  for (int i = 0; i < 4; ++i)
    if (rep.parities[i] < 0) rep.quadratic_branch_points.push_back(i + 1);

  Permutation prod = rep.lifted[0];
  for (int i = 1; i < 4; ++i) prod = compose(prod, rep.lifted[i]);
  rep.product_one = prod.is_identity();
  rep.transitive = is_transitive(rep.lifted);
  rep.all_lifts_even = true;
  for (const auto& g : rep.lifted)
    if (g.parity() < 0) rep.all_lifts_even = false;
  if (2 * n <= kMaxStabilizerChainDegree) {
    rep.order_checked = true;
    rep.order = group_order(rep.lifted).order;
  }
  return rep;
}

}  // namespace hurwitz
