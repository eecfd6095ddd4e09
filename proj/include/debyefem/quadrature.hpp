/**
 * @file quadrature.hpp
 * @brief Tensor-product Gauss-Legendre rules on axis-aligned rectangles.
 */

#ifndef DEBYEFEM_QUADRATURE_HPP
#define DEBYEFEM_QUADRATURE_HPP

#include <vector>

namespace debyefem {

struct QuadRule {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;  ///< positive weights summing to the cell area

  int size() const { return static_cast<int>(w.size()); }
};

/// Gauss-Legendre nodes on [-1, 1]. 1 <= n <= 16.
const std::vector<double>& gauss_nodes_1d(int n);
const std::vector<double>& gauss_weights_1d(int n);

/// n-point-per-direction tensor rule on [x0,x1] x [y0,y1]. Integrates
/// Q_{2n-1,2n-1} exactly.
QuadRule gauss_rule(int points_per_dir, double x0, double y0, double x1,
                    double y1);

}  // namespace debyefem

#endif
