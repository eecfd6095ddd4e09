/**
 * @file postprocess.hpp
 * @brief Macroelement superconvergence recovery: per 2x2 macroelement,
 *        bilinear vector fields recovered from fine-edge tangential integrals
 *        (edge fields) or fine-cell averages (cell fields).
 */

#ifndef DEBYEFEM_POSTPROCESS_HPP
#define DEBYEFEM_POSTPROCESS_HPP

#include <array>
#include <vector>

#include "debyefem/mesh.hpp"
#include "debyefem/spaces.hpp"

namespace debyefem {

/// Per-macroelement Q_{1,1} representation, basis {1, xi, eta, xi*eta} with
/// xi, eta in [-1, 1] macro-local coordinates, per vector component.
struct MacroField {
  std::vector<std::array<double, 4>> comp1;
  std::vector<std::array<double, 4>> comp2;

  int n_macros() const { return static_cast<int>(comp1.size()); }
};

/// Recover a bilinear field whose sub-segment tangential integrals along the
/// bottom/top macro lines (component 1) and left/right macro lines
/// (component 2) match the fine-edge integrals of the input field.
MacroField postprocess_E(const QuadMesh& mesh, const MacroPairing& pairing,
                         const EdgeField& field);

/// Recover a bilinear field whose four fine-cell averages match the input
/// field's cell averages, per component.
MacroField postprocess_P(const QuadMesh& mesh, const MacroPairing& pairing,
                         const CellField& field);

/// Evaluate a macro field at (x, y) inside macroelement m.
std::array<double, 2> eval_macro_field(const QuadMesh& mesh,
                                       const MacroPairing& pairing,
                                       const MacroField& field, int m, double x,
                                       double y);

}  // namespace debyefem

#endif
