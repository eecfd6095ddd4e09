#include "debyefem/postprocess.hpp"

namespace debyefem {

namespace {

// Q_{1,1} coefficients {a, b, c, d} (basis {1, xi, eta, xi*eta}) from the
// four half-line means: lm/rm = left/right sub-segment means on eta = -1/+1.
std::array<double, 4> from_line_means(double left_lo, double right_lo,
                                      double left_hi, double right_hi) {
  const double a = 0.25 * (left_lo + right_lo + left_hi + right_hi);
  const double b = 0.5 * ((right_lo - left_lo) + (right_hi - left_hi));
  const double c = 0.25 * ((left_hi + right_hi) - (left_lo + right_lo));
  const double d = 0.5 * ((right_hi - left_hi) - (right_lo - left_lo));
  return {a, b, c, d};
}

// Coefficients from the four quadrant cell means m_{ij} (i: xi, j: eta).
std::array<double, 4> from_cell_means(double m00, double m10, double m01,
                                      double m11) {
  const double a = 0.25 * (m00 + m10 + m01 + m11);
  const double b = 0.5 * ((m10 + m11) - (m00 + m01));
  const double c = 0.5 * ((m01 + m11) - (m00 + m10));
  const double d = m11 - m10 - m01 + m00;
  return {a, b, c, d};
}

}  // namespace

MacroField postprocess_E(const QuadMesh& mesh, const MacroPairing& pairing,
                         const EdgeField& field) {
  MacroField out;
  out.comp1.resize(pairing.n_macros());
  out.comp2.resize(pairing.n_macros());
  for (int m = 0; m < pairing.n_macros(); ++m) {
    const auto& cells = pairing.macro_cells[m];  // {c00, c10, c01, c11}
    const auto dof = [&](int cell, int local) {
      return field.coeffs[mesh.cell_edges[cell][local]];
    };
    // Component 1 from horizontal-edge means on the bottom/top macro lines.
    out.comp1[m] = from_line_means(
        dof(cells[0], kCellBottom), dof(cells[1], kCellBottom),
        dof(cells[2], kCellTop), dof(cells[3], kCellTop));
    // Component 2 from vertical-edge means on the left/right macro lines;
    // same algebra with the roles of xi and eta exchanged.
    const auto coeff = from_line_means(
        dof(cells[0], kCellLeft), dof(cells[2], kCellLeft),
        dof(cells[1], kCellRight), dof(cells[3], kCellRight));
    out.comp2[m] = {coeff[0], coeff[2], coeff[1], coeff[3]};
  }
  return out;
}

MacroField postprocess_P(const QuadMesh& mesh, const MacroPairing& pairing,
                         const CellField& field) {
  (void)mesh;
  MacroField out;
  out.comp1.resize(pairing.n_macros());
  out.comp2.resize(pairing.n_macros());
  for (int m = 0; m < pairing.n_macros(); ++m) {
    const auto& cells = pairing.macro_cells[m];
    // cell averages of W_h fields are the mean coefficients
    out.comp1[m] = from_cell_means(
        field.coeffs[4 * cells[0] + 0], field.coeffs[4 * cells[1] + 0],
        field.coeffs[4 * cells[2] + 0], field.coeffs[4 * cells[3] + 0]);
    out.comp2[m] = from_cell_means(
        field.coeffs[4 * cells[0] + 2], field.coeffs[4 * cells[1] + 2],
        field.coeffs[4 * cells[2] + 2], field.coeffs[4 * cells[3] + 2]);
  }
  return out;
}

std::array<double, 2> eval_macro_field(const QuadMesh& mesh,
                                       const MacroPairing& pairing,
                                       const MacroField& field, int m, double x,
                                       double y) {
  const double h = mesh.h;
  const double xc = (2 * pairing.macro_coords[m][0] + 1) * h;
  const double yc = (2 * pairing.macro_coords[m][1] + 1) * h;
  const double xi = (x - xc) / h;
  const double eta = (y - yc) / h;
  const auto& c1 = field.comp1[m];
  const auto& c2 = field.comp2[m];
  return {c1[0] + c1[1] * xi + c1[2] * eta + c1[3] * xi * eta,
          c2[0] + c2[1] * xi + c2[2] * eta + c2[3] * xi * eta};
}

}  // namespace debyefem
