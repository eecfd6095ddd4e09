#include "debyefem/assembly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "debyefem/quadrature.hpp"

namespace debyefem {

void SparseOperator::matvec(const std::vector<double>& x,
                            std::vector<double>& y) const {
  y.assign(n, 0.0);
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
      acc += vals[k] * x[col_idx[k]];
    y[r] = acc;
  }
}

std::vector<double> SparseOperator::matvec(const std::vector<double>& x) const {
  std::vector<double> y;
  matvec(x, y);
  return y;
}

double SparseOperator::max_asymmetry() const {
  double worst = 0.0;
  for (int r = 0; r < n; ++r)
    for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      const int c = col_idx[k];
      double transposed = 0.0;
      for (int k2 = row_ptr[c]; k2 < row_ptr[c + 1]; ++k2)
        if (col_idx[k2] == r) {
          transposed = vals[k2];
          break;
        }
      worst = std::max(worst, std::abs(vals[k] - transposed));
    }
  return worst;
}

void SparseOperator::add_scaled(const SparseOperator& other, double alpha) {
  if (n != other.n || col_idx != other.col_idx || row_ptr != other.row_ptr)
    throw std::invalid_argument(
        "SparseOperator::add_scaled: sparsity patterns differ");
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] += alpha * other.vals[k];
}

void SparseOperator::scale(double alpha) {
  for (double& v : vals) v *= alpha;
}

namespace {

/// Assemble an edge-space operator from per-cell 4x4 local matrices.
/// The pattern always contains every cell-local pair, so operators on the
/// same mesh compose entrywise.
template <typename LocalFn>
SparseOperator assemble_edge_operator(const QuadMesh& mesh, LocalFn local) {
  const int n = mesh.n_edges();
  SparseOperator op;
  op.n = n;

  // pattern: union of cell-local couplings, columns sorted per row
  std::vector<std::vector<int>> cols(n);
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        cols[mesh.cell_edges[c][a]].push_back(mesh.cell_edges[c][b]);
  op.row_ptr.assign(n + 1, 0);
  for (int r = 0; r < n; ++r) {
    auto& cr = cols[r];
    std::sort(cr.begin(), cr.end());
    cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
    op.row_ptr[r + 1] = op.row_ptr[r] + static_cast<int>(cr.size());
  }
  op.col_idx.reserve(op.row_ptr[n]);
  for (int r = 0; r < n; ++r)
    op.col_idx.insert(op.col_idx.end(), cols[r].begin(), cols[r].end());
  op.vals.assign(op.col_idx.size(), 0.0);

  auto entry = [&op](int r, int c) -> double& {
    auto first = op.col_idx.begin() + op.row_ptr[r];
    auto last = op.col_idx.begin() + op.row_ptr[r + 1];
    auto it = std::lower_bound(first, last, c);
    return op.vals[static_cast<std::size_t>(it - op.col_idx.begin())];
  };

  std::array<std::array<double, 4>, 4> loc;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    local(c, loc);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        entry(mesh.cell_edges[c][a], mesh.cell_edges[c][b]) += loc[a][b];
  }
  return op;
}

}  // namespace

SparseOperator assemble_mass(const QuadMesh& mesh, int quad_order) {
  return assemble_edge_operator(
      mesh, [&](int c, std::array<std::array<double, 4>, 4>& loc) {
        QuadRule rule = gauss_rule(quad_order, mesh.cell_x0(c), mesh.cell_y0(c),
                                   mesh.cell_x1(c), mesh.cell_y1(c));
        for (auto& row : loc) row.fill(0.0);
        for (int q = 0; q < rule.size(); ++q) {
          const auto phi = edge_shape_values(mesh, c, rule.x[q], rule.y[q]);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              loc[a][b] += rule.w[q] * (phi[a][0] * phi[b][0] +
                                        phi[a][1] * phi[b][1]);
        }
      });
}

SparseOperator assemble_stiffness(const QuadMesh& mesh, int quad_order) {
  (void)quad_order;  // curls are constant per cell; exact either way
  const double inv_h = 1.0 / mesh.h;
  const double area = mesh.h * mesh.h;
  const std::array<double, 4> curl = {inv_h, -inv_h, -inv_h, inv_h};
  return assemble_edge_operator(
      mesh, [&](int /*c*/, std::array<std::array<double, 4>, 4>& loc) {
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) loc[a][b] = area * curl[a] * curl[b];
      });
}

SparseOperator assemble_weighted_mass(const QuadMesh& mesh,
                                      const CellField& p_prev,
                                      const NonlinearLaw& law, int quad_order,
                                      bool* range_exceeded) {
  if (range_exceeded) *range_exceeded = false;
  return assemble_edge_operator(
      mesh, [&](int c, std::array<std::array<double, 4>, 4>& loc) {
        QuadRule rule = gauss_rule(quad_order, mesh.cell_x0(c), mesh.cell_y0(c),
                                   mesh.cell_x1(c), mesh.cell_y1(c));
        for (auto& row : loc) row.fill(0.0);
        for (int q = 0; q < rule.size(); ++q) {
          const auto p = eval_cell_field(mesh, p_prev, c, rule.x[q], rule.y[q]);
          if (range_exceeded && (!law.in_range(p[0]) || !law.in_range(p[1])))
            *range_exceeded = true;
          const double w1 = law.deriv(p[0]);
          const double w2 = law.deriv(p[1]);
          const auto phi = edge_shape_values(mesh, c, rule.x[q], rule.y[q]);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              loc[a][b] += rule.w[q] * (w1 * phi[a][0] * phi[b][0] +
                                        w2 * phi[a][1] * phi[b][1]);
        }
      });
}

std::vector<double> assemble_load(const QuadMesh& mesh, const CellVecFn& g,
                                  int quad_order) {
  std::vector<double> load(mesh.n_edges(), 0.0);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    QuadRule rule = gauss_rule(quad_order, mesh.cell_x0(c), mesh.cell_y0(c),
                               mesh.cell_x1(c), mesh.cell_y1(c));
    for (int q = 0; q < rule.size(); ++q) {
      const auto gv = g(c, rule.x[q], rule.y[q]);
      const auto phi = edge_shape_values(mesh, c, rule.x[q], rule.y[q]);
      for (int a = 0; a < 4; ++a)
        load[mesh.cell_edges[c][a]] +=
            rule.w[q] * (gv[0] * phi[a][0] + gv[1] * phi[a][1]);
    }
  }
  return load;
}

std::vector<double> assemble_load(const QuadMesh& mesh, const VecFn& g,
                                  int quad_order) {
  return assemble_load(
      mesh, [&g](int, double x, double y) { return g(x, y); }, quad_order);
}

std::vector<double> assemble_load_W(const QuadMesh& mesh, const VecFn& g,
                                    int quad_order) {
  std::vector<double> load(4 * mesh.cells.size(), 0.0);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    QuadRule rule = gauss_rule(quad_order, mesh.cell_x0(c), mesh.cell_y0(c),
                               mesh.cell_x1(c), mesh.cell_y1(c));
    const double cx = 0.5 * (mesh.cell_x0(c) + mesh.cell_x1(c));
    const double cy = 0.5 * (mesh.cell_y0(c) + mesh.cell_y1(c));
    for (int q = 0; q < rule.size(); ++q) {
      const auto gv = g(rule.x[q], rule.y[q]);
      const double xi = 2.0 * (rule.x[q] - cx) / mesh.h;
      const double eta = 2.0 * (rule.y[q] - cy) / mesh.h;
      load[4 * c + 0] += rule.w[q] * gv[0];
      load[4 * c + 1] += rule.w[q] * gv[0] * xi;
      load[4 * c + 2] += rule.w[q] * gv[1];
      load[4 * c + 3] += rule.w[q] * gv[1] * eta;
    }
  }
  return load;
}

void apply_dirichlet(const QuadMesh& mesh, SparseOperator& op) {
  if (op.n != mesh.n_edges())
    throw std::invalid_argument("apply_dirichlet: dimension mismatch");
  for (int r = 0; r < op.n; ++r) {
    const bool r_bdy = mesh.edges[r].boundary;
    for (int k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k) {
      const int c = op.col_idx[k];
      if (r_bdy || mesh.edges[c].boundary)
        op.vals[k] = (r == c) ? 1.0 : 0.0;
    }
  }
}

void apply_dirichlet_rhs(const QuadMesh& mesh, std::vector<double>& rhs) {
  for (int r = 0; r < static_cast<int>(rhs.size()); ++r)
    if (mesh.edges[r].boundary) rhs[r] = 0.0;
}

}  // namespace debyefem
