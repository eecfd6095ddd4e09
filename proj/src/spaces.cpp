#include "debyefem/spaces.hpp"

#include <stdexcept>

#include "debyefem/quadrature.hpp"

namespace debyefem {

void PhysParams::validate() const {
  if (!(eps0 > 0.0 && mu0 > 0.0 && tau > 0.0))
    throw std::invalid_argument("PhysParams: eps0, mu0, tau must be positive");
  if (!(eps_s > eps_inf && eps_inf > 0.0))
    throw std::invalid_argument("PhysParams: require eps_s > eps_inf > 0");
}

EdgeField interp_edge(const QuadMesh& mesh, const VecFn& u, int quad_order) {
  const auto& nodes = gauss_nodes_1d(quad_order);
  const auto& weights = gauss_weights_1d(quad_order);
  const double h = mesh.h;

  EdgeField field;
  field.coeffs.assign(mesh.edges.size(), 0.0);
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const Edge& edge = mesh.edges[e];
    const double x0 = edge.ix * h, y0 = edge.iy * h;
    double mean = 0.0;
    for (int q = 0; q < quad_order; ++q) {
      const double s = 0.5 * (nodes[q] + 1.0);  // arclength fraction
      const double w = 0.5 * weights[q];        // mean, not integral
      if (edge.dir == EdgeDir::Horizontal)
        mean += w * u(x0 + s * h, y0)[0];
      else
        mean += w * u(x0, y0 + s * h)[1];
    }
    field.coeffs[e] = mean;
  }
  return field;
}

CellField project_W(const QuadMesh& mesh, const VecFn& v, int quad_order) {
  CellField field;
  field.coeffs.assign(4 * mesh.cells.size(), 0.0);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    QuadRule rule = gauss_rule(quad_order, mesh.cell_x0(c), mesh.cell_y0(c),
                               mesh.cell_x1(c), mesh.cell_y1(c));
    const double cx = 0.5 * (mesh.cell_x0(c) + mesh.cell_x1(c));
    const double cy = 0.5 * (mesh.cell_y0(c) + mesh.cell_y1(c));
    const double area = mesh.h * mesh.h;
    double m1_0 = 0.0, m1_xi = 0.0, m2_0 = 0.0, m2_eta = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
      const auto val = v(rule.x[q], rule.y[q]);
      const double xi = 2.0 * (rule.x[q] - cx) / mesh.h;
      const double eta = 2.0 * (rule.y[q] - cy) / mesh.h;
      m1_0 += rule.w[q] * val[0];
      m1_xi += rule.w[q] * val[0] * xi;
      m2_0 += rule.w[q] * val[1];
      m2_eta += rule.w[q] * val[1] * eta;
    }
    // Local Gram is diag(|K|, |K|/3) per component for the {1, xi} basis.
    double* p = &field.coeffs[4 * c];
    p[0] = m1_0 / area;
    p[1] = 3.0 * m1_xi / area;
    p[2] = m2_0 / area;
    p[3] = 3.0 * m2_eta / area;
  }
  return field;
}

std::array<std::array<double, 2>, 4> edge_shape_values(const QuadMesh& mesh,
                                                       int c, double x,
                                                       double y) {
  const double x0 = mesh.cell_x0(c), y0 = mesh.cell_y0(c);
  const double x1 = mesh.cell_x1(c), y1 = mesh.cell_y1(c);
  const double hx = x1 - x0, hy = y1 - y0;
  (void)x;
  return {{{(y1 - y) / hy, 0.0},    // bottom
           {(y - y0) / hy, 0.0},    // top
           {0.0, (x1 - x) / hx},    // left
           {0.0, (x - x0) / hx}}};  // right
}

std::array<double, 2> eval_edge_field(const QuadMesh& mesh,
                                      const EdgeField& field, int c, double x,
                                      double y) {
  const auto shapes = edge_shape_values(mesh, c, x, y);
  std::array<double, 2> out = {0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    const double a = field.coeffs[mesh.cell_edges[c][k]];
    out[0] += a * shapes[k][0];
    out[1] += a * shapes[k][1];
  }
  return out;
}

std::array<double, 2> eval_edge_field(const QuadMesh& mesh,
                                      const EdgeField& field, double x,
                                      double y) {
  int c = mesh.locate_cell(x, y);
  if (c < 0) throw std::invalid_argument("eval_edge_field: point outside domain");
  return eval_edge_field(mesh, field, c, x, y);
}

double eval_curl(const QuadMesh& mesh, const EdgeField& field, int c) {
  const double inv_h = 1.0 / mesh.h;
  // curls of {bottom, top, left, right} shapes: {1, -1, -1, 1} / h
  const auto& e = mesh.cell_edges[c];
  return inv_h * (field.coeffs[e[kCellBottom]] - field.coeffs[e[kCellTop]] -
                  field.coeffs[e[kCellLeft]] + field.coeffs[e[kCellRight]]);
}

std::array<double, 2> eval_cell_field(const QuadMesh& mesh,
                                      const CellField& field, int c, double x,
                                      double y) {
  const double cx = 0.5 * (mesh.cell_x0(c) + mesh.cell_x1(c));
  const double cy = 0.5 * (mesh.cell_y0(c) + mesh.cell_y1(c));
  const double xi = 2.0 * (x - cx) / mesh.h;
  const double eta = 2.0 * (y - cy) / mesh.h;
  const double* p = &field.coeffs[4 * c];
  return {p[0] + p[1] * xi, p[2] + p[3] * eta};
}

void zero_boundary_dofs(const QuadMesh& mesh, EdgeField& field) {
  for (std::size_t e = 0; e < mesh.edges.size(); ++e)
    if (mesh.edges[e].boundary) field.coeffs[e] = 0.0;
}

}  // namespace debyefem
