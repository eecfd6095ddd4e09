#include "debyefem/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace debyefem {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

SolveReport cg_solve(const SparseOperator& A, const std::vector<double>& b,
                     std::vector<double>& x, double tol, int max_iter,
                     Precond precond) {
  const int n = A.n;
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("cg_solve: dimension mismatch");
  if (static_cast<int>(x.size()) != n) x.assign(n, 0.0);

  std::vector<double> inv_diag(n, 1.0);
  if (precond == Precond::Jacobi)
    for (int r = 0; r < n; ++r)
      for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
        if (A.col_idx[k] == r && A.vals[k] != 0.0) inv_diag[r] = 1.0 / A.vals[k];

  SolveReport report;
  const double b_norm = norm2(b);
  if (b_norm == 0.0) {
    x.assign(n, 0.0);
    report.converged = true;
    return report;
  }

  std::vector<double> r(n), z(n), p(n), Ap(n);
  A.matvec(x, Ap);
  for (int i = 0; i < n; ++i) r[i] = b[i] - Ap[i];
  for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
  p = z;
  double rz = 0.0;
  for (int i = 0; i < n; ++i) rz += r[i] * z[i];

  for (int it = 0; it < max_iter; ++it) {
    report.final_residual = norm2(r) / b_norm;
    if (report.final_residual <= tol) {
      report.converged = true;
      return report;
    }
    A.matvec(p, Ap);
    double pAp = 0.0;
    for (int i = 0; i < n; ++i) pAp += p[i] * Ap[i];
    if (pAp <= 0.0) {
      report.indefinite = true;
      return report;
    }
    const double alpha = rz / pAp;
    for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
    for (int i = 0; i < n; ++i) r[i] -= alpha * Ap[i];
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    double rz_new = 0.0;
    for (int i = 0; i < n; ++i) rz_new += r[i] * z[i];
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    report.iterations = it + 1;
  }
  report.final_residual = norm2(r) / b_norm;
  report.converged = report.final_residual <= tol;
  return report;
}

std::vector<double> dense_solve(const std::vector<std::vector<double>>& A,
                                const std::vector<double>& b) {
  const int n = static_cast<int>(b.size());
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(A[i].size()) != n)
      throw std::invalid_argument("dense_solve: matrix must be square");
    rhs(i) = b[i];
    for (int j = 0; j < n; ++j) m(i, j) = A[i][j];
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  if (std::abs(lu.determinant()) < 1e-300)
    throw std::runtime_error("dense_solve: singular matrix");
  Eigen::VectorXd sol = lu.solve(rhs);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = sol(i);
  return out;
}

std::vector<std::vector<double>> to_dense(const SparseOperator& A) {
  std::vector<std::vector<double>> dense(A.n, std::vector<double>(A.n, 0.0));
  for (int r = 0; r < A.n; ++r)
    for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
      dense[r][A.col_idx[k]] += A.vals[k];
  return dense;
}

}  // namespace debyefem
