#include "hurwitz/linalg.hpp"

#include <gmpxx.h>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw error("fraction free elimination lost exactness");
  return q;
}

}  // namespace

LinearSolveResult linear_solve_exact(const std::vector<std::vector<Rational>>& A,
                               const std::vector<Rational>& b) {
  const int m = static_cast<int>(A.size());
  if (static_cast<int>(b.size()) != m)
    throw invalid_parameter("right hand side length does not match row count");
  const int nc = m == 0 ? 0 : static_cast<int>(A[0].size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != nc)
      throw invalid_parameter("ragged coefficient matrix");

  // clear denominators row by row
  std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(nc + 1));
  for (int i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < nc; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A[i][j].denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].denominator().get_mpz_t());
    for (int j = 0; j < nc; ++j)
      M[i][j] = A[i][j].numerator() * (l / A[i][j].denominator());
    M[i][nc] = b[i].numerator() * (l / b[i].denominator());
  }

  // fraction free forward elimination with row pivoting
  std::vector<int> pivot_cols;
  mpz_class prev(1);
  int rank = 0;
  for (int col = 0; col < nc && rank < m; ++col) {
    int pr = -1;
    for (int r = rank; r < m; ++r)
      if (M[r][col] != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(M[rank], M[pr]);
    for (int i = rank + 1; i < m; ++i) {
      for (int j = col + 1; j <= nc; ++j)
        M[i][j] = divexact(M[rank][col] * M[i][j] - M[i][col] * M[rank][j], prev);
      M[i][col] = 0;
    }
    prev = M[rank][col];
    pivot_cols.push_back(col);
    ++rank;
  }

  LinearSolveResult res;
  res.rank = rank;
  res.pivot_columns = pivot_cols;

  for (int i = rank; i < m; ++i)
    if (M[i][nc] != 0) {
      res.status = SolveStatus::kInconsistent;
      return res;
    }

  std::vector<bool> is_pivot(nc, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  auto back_substitute = [&](const std::vector<Rational>& free_values) {
    // free_values holds one entry per column; only non pivot columns are read
    std::vector<Rational> x(nc);
    for (int j = 0; j < nc; ++j)
      if (!is_pivot[j]) x[j] = free_values[j];
    for (int i = rank - 1; i >= 0; --i) {
      int p = pivot_cols[i];
      Rational s{mpz_class(M[i][nc])};
      for (int j = p + 1; j < nc; ++j) {
        if (M[i][j] != 0) s -= Rational(mpz_class(M[i][j])) * x[j];
      }
      x[p] = s / Rational(mpz_class(M[i][p]));
    }
    return x;
  };

  std::vector<Rational> zeros(nc);
  if (rank == nc) {
    res.status = SolveStatus::kUnique;
    res.solution = back_substitute(zeros);
    return res;
  }

  res.status = SolveStatus::kUnderdetermined;
  res.solution = back_substitute(zeros);
  // kernel basis: one vector per free column
  std::vector<std::vector<mpz_class>> H(M);
  for (auto& row : H) row[nc] = 0;
  for (int f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(nc);
    x[f] = Rational(1);
    for (int i = rank - 1; i >= 0; --i) {
      int p = pivot_cols[i];
      Rational s(0);
      for (int j = p + 1; j < nc; ++j)
        if (H[i][j] != 0) s -= Rational(mpz_class(H[i][j])) * x[j];
      x[p] = s / Rational(mpz_class(H[i][p]));
    }
    res.nullspace.push_back(std::move(x));
  }
  return res;
}

std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& A) {
  std::vector<Rational> b(A.size());
  auto res = linear_solve_exact(A, b);
  return res.nullspace;
}

}  // namespace hurwitz
