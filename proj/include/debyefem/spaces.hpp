/**
 * @file spaces.hpp
 * @brief Lowest-order Nedelec edge space N_h and the discontinuous space W_h
 *        on rectangles, with edge interpolation, elementwise L2 projection,
 *        field evaluation and discrete curl.
 *
 * Per cell the N_h components satisfy E1 in Q_{0,1}, E2 in Q_{1,0}; the edge
 * DOF is the mean tangential value along the edge. The W_h components satisfy
 * P1 in Q_{1,0} (basis {1, xi}) and P2 in Q_{0,1} (basis {1, eta}) with
 * xi, eta in [-1, 1] cell-local coordinates; 4 DOFs per cell stored as
 * [p1_0, p1_xi, p2_0, p2_eta].
 */

#ifndef DEBYEFEM_SPACES_HPP
#define DEBYEFEM_SPACES_HPP

#include <array>
#include <functional>
#include <vector>

#include "debyefem/mesh.hpp"

namespace debyefem {

using VecFn = std::function<std::array<double, 2>(double, double)>;

struct EdgeField {
  std::vector<double> coeffs;  ///< one DOF per mesh edge
};

struct CellField {
  std::vector<double> coeffs;  ///< 4 DOFs per active cell
};

struct PhysParams {
  double eps0 = 1.0;
  double mu0 = 1.0;
  double tau = 1.0;
  double eps_s = 2.0;
  double eps_inf = 1.0;

  double a1() const { return eps0 * mu0 * (eps_s - eps_inf) / tau; }
  double a2() const { return eps0 * mu0 * (eps_s - eps_inf) / (tau * tau); }
  void validate() const;
};

/// Edge interpolation: DOF on edge e is the mean tangential component
/// (1/|e|) int_e u . t ds, computed with a 1D Gauss rule.
EdgeField interp_edge(const QuadMesh& mesh, const VecFn& u, int quad_order = 5);

/// Elementwise L2 projection onto W_h.
CellField project_W(const QuadMesh& mesh, const VecFn& v, int quad_order = 5);

/// Values of the 4 local N_h shape functions at (x, y) inside cell c,
/// in local edge order {bottom, top, left, right}. Each is a 2-vector.
std::array<std::array<double, 2>, 4> edge_shape_values(const QuadMesh& mesh,
                                                       int c, double x,
                                                       double y);

std::array<double, 2> eval_edge_field(const QuadMesh& mesh,
                                      const EdgeField& field, int c, double x,
                                      double y);

/// Evaluation by point location; throws if (x, y) is outside the domain.
std::array<double, 2> eval_edge_field(const QuadMesh& mesh,
                                      const EdgeField& field, double x,
                                      double y);

/// Discrete curl dx E2 - dy E1; constant per cell for k = 1.
double eval_curl(const QuadMesh& mesh, const EdgeField& field, int c);

std::array<double, 2> eval_cell_field(const QuadMesh& mesh,
                                      const CellField& field, int c, double x,
                                      double y);

void zero_boundary_dofs(const QuadMesh& mesh, EdgeField& field);

}  // namespace debyefem

#endif
