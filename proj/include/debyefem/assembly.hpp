/**
 * @file assembly.hpp
 * @brief Sparse CSR operators for the per-step bilinear forms: edge mass,
 *        curl-curl stiffness, coefficient-weighted mass, and load vectors.
 */

#ifndef DEBYEFEM_ASSEMBLY_HPP
#define DEBYEFEM_ASSEMBLY_HPP

#include <array>
#include <functional>
#include <vector>

#include "debyefem/mesh.hpp"
#include "debyefem/nonlinearity.hpp"
#include "debyefem/spaces.hpp"

namespace debyefem {

/// Square CSR matrix. Operators assembled on the same mesh share an
/// identical sparsity pattern (all cell-local pairs are present).
struct SparseOperator {
  int n = 0;
  std::vector<int> row_ptr;
  std::vector<int> col_idx;
  std::vector<double> vals;

  void matvec(const std::vector<double>& x, std::vector<double>& y) const;
  std::vector<double> matvec(const std::vector<double>& x) const;
  double max_asymmetry() const;

  /// this += alpha * other; patterns must be identical.
  void add_scaled(const SparseOperator& other, double alpha);
  void scale(double alpha);
};

/// Edge mass matrix M[a,b] = int phi_a . phi_b.
SparseOperator assemble_mass(const QuadMesh& mesh, int quad_order = 5);

/// Curl-curl stiffness K[a,b] = int (curl phi_a)(curl phi_b).
SparseOperator assemble_stiffness(const QuadMesh& mesh, int quad_order = 5);

/// Weighted mass int diag(f'(P1_prev), f'(P2_prev)) phi_a . phi_b.
/// Sets *range_exceeded when |P_prev| exits the law's declared range at any
/// quadrature point (if non-null).
SparseOperator assemble_weighted_mass(const QuadMesh& mesh,
                                      const CellField& p_prev,
                                      const NonlinearLaw& law,
                                      int quad_order = 5,
                                      bool* range_exceeded = nullptr);

/// Load against the edge basis, component a = int g . phi_a, where g is
/// given per cell (so piecewise data like f'(P)f(P) can be integrated).
using CellVecFn = std::function<std::array<double, 2>(int cell, double x, double y)>;
std::vector<double> assemble_load(const QuadMesh& mesh, const CellVecFn& g,
                                  int quad_order = 5);
std::vector<double> assemble_load(const QuadMesh& mesh, const VecFn& g,
                                  int quad_order = 5);

/// Load against the W_h basis (4 entries per cell, basis order as CellField).
std::vector<double> assemble_load_W(const QuadMesh& mesh, const VecFn& g,
                                    int quad_order = 5);

/// Dirichlet elimination: zero rows/columns of the boundary DOFs, put 1 on
/// the diagonal. Preserves symmetry.
void apply_dirichlet(const QuadMesh& mesh, SparseOperator& op);
void apply_dirichlet_rhs(const QuadMesh& mesh, std::vector<double>& rhs);

}  // namespace debyefem

#endif
