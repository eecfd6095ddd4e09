/**
 * @file linalg.hpp
 * @brief Conjugate-gradient solver for the per-step E-system and dense
 *        fallbacks used by the oracle checks.
 */

#ifndef DEBYEFEM_LINALG_HPP
#define DEBYEFEM_LINALG_HPP

#include <vector>

#include "debyefem/assembly.hpp"

namespace debyefem {

enum class Precond { None, Jacobi };

struct SolveReport {
  int iterations = 0;
  double final_residual = 0.0;  ///< ||Ax - b||_2 / ||b||_2
  bool converged = false;
  bool indefinite = false;  ///< negative p^T A p encountered
};

/// CG for symmetric positive definite systems. Detects indefiniteness via
/// negative p^T A p, which for the E-system means the Theorem-style time
/// step admissibility bound was violated.
SolveReport cg_solve(const SparseOperator& A, const std::vector<double>& b,
                     std::vector<double>& x, double tol = 1e-10,
                     int max_iter = 1000, Precond precond = Precond::Jacobi);

/// Dense LU with partial pivoting (oracle path). Throws on singular input.
std::vector<double> dense_solve(const std::vector<std::vector<double>>& A,
                                const std::vector<double>& b);

std::vector<std::vector<double>> to_dense(const SparseOperator& A);

double norm2(const std::vector<double>& v);

}  // namespace debyefem

#endif
