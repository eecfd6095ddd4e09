/**
 * @file mesh.hpp
 * @brief Uniform axis-aligned quadrilateral meshes on the unit square and the
 *        L-shaped domain, with oriented edges and 2x2 macroelement pairing.
 */

#ifndef DEBYEFEM_MESH_HPP
#define DEBYEFEM_MESH_HPP

#include <array>
#include <vector>

namespace debyefem {

enum class DomainKind { UnitSquare, LShape };

enum class EdgeDir { Horizontal, Vertical };

/// Oriented lattice edge. Horizontal edges point +x, vertical edges +y;
/// orientation signs for the curl circulation live in QuadMesh::cell_edge_signs.
struct Edge {
  EdgeDir dir;
  int ix;  ///< lattice x-index of the edge origin
  int iy;  ///< lattice y-index of the edge origin
  bool boundary;
};

struct Cell {
  int ix;
  int iy;
};

/// Local edge order within a cell: bottom, top, left, right.
inline constexpr int kCellBottom = 0;
inline constexpr int kCellTop = 1;
inline constexpr int kCellLeft = 2;
inline constexpr int kCellRight = 3;

class QuadMesh {
 public:
  DomainKind domain_kind;
  int n_per_side;  ///< cells per unit length
  double h;        ///< 1 / n_per_side

  std::vector<Cell> cells;
  std::vector<Edge> edges;
  /// cell -> 4 edge indices in local order {bottom, top, left, right}
  std::vector<std::array<int, 4>> cell_edges;
  /// circulation signs matching cell_edges: {+1, -1, -1, +1}
  std::vector<std::array<int, 4>> cell_edge_signs;

  /// cell index at lattice (ix, iy), or -1 if inactive / out of range
  int cell_at(int ix, int iy) const {
    if (ix < 0 || iy < 0 || ix >= n_per_side || iy >= n_per_side) return -1;
    return cell_index_[static_cast<std::size_t>(iy) * n_per_side + ix];
  }

  double cell_x0(int c) const { return cells[c].ix * h; }
  double cell_y0(int c) const { return cells[c].iy * h; }
  double cell_x1(int c) const { return (cells[c].ix + 1) * h; }
  double cell_y1(int c) const { return (cells[c].iy + 1) * h; }

  int n_cells() const { return static_cast<int>(cells.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }

  /// Cell containing (x, y), or -1. Points on shared cell faces resolve to
  /// the lower-index cell.
  int locate_cell(double x, double y) const;

  std::vector<int> cell_index_;  // lattice -> compact cell id, -1 inactive
};

/// 2x2 macroelement pairing of fine cells (requires even n_per_side).
struct MacroPairing {
  int n_macro_per_side;
  /// fine cells of each macro in order {(0,0), (1,0), (0,1), (1,1)}
  std::vector<std::array<int, 4>> macro_cells;
  /// macro lattice coordinates (I, J) per macro
  std::vector<std::array<int, 2>> macro_coords;
  std::vector<int> fine_to_macro;

  int n_macros() const { return static_cast<int>(macro_cells.size()); }
};

QuadMesh build_mesh(DomainKind domain_kind, int n);

MacroPairing macro_pairing(const QuadMesh& mesh);

std::vector<int> boundary_edges(const QuadMesh& mesh);

}  // namespace debyefem

#endif
