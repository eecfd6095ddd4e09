#include "debyefem/mesh.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace debyefem {

namespace {

bool cell_active(DomainKind kind, int n, int ix, int iy) {
  if (kind == DomainKind::UnitSquare) return true;
  // L-shape: drop cells whose centers lie inside [0.5,1] x [0,0.5].
  double cx = (ix + 0.5) / n;
  double cy = (iy + 0.5) / n;
  return !(cx > 0.5 && cy < 0.5);
}

}  // namespace

int QuadMesh::locate_cell(double x, double y) const {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) return -1;
  int ix = static_cast<int>(x * n_per_side);
  int iy = static_cast<int>(y * n_per_side);
  if (ix == n_per_side) ix--;
  if (iy == n_per_side) iy--;
  return cell_at(ix, iy);
}

QuadMesh build_mesh(DomainKind domain_kind, int n) {
  if (n < 2) throw std::invalid_argument("build_mesh: N must be >= 2");
  if (domain_kind == DomainKind::LShape && n % 2 != 0)
    throw std::invalid_argument("build_mesh: L-shape requires even N");

  QuadMesh mesh;
  mesh.domain_kind = domain_kind;
  mesh.n_per_side = n;
  mesh.h = 1.0 / n;

  mesh.cell_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      if (cell_active(domain_kind, n, ix, iy)) {
        mesh.cell_index_[static_cast<std::size_t>(iy) * n + ix] =
            static_cast<int>(mesh.cells.size());
        mesh.cells.push_back({ix, iy});
      }

  // Lattice edge numbering: lexicographic by (row, column), horizontals first.
  // Horizontal edge (ix, iy): from (ix,iy) to (ix+1,iy), ix in [0,n), iy in [0,n].
  // Vertical edge (ix, iy): from (ix,iy) to (ix,iy+1), ix in [0,n], iy in [0,n).
  auto h_id = [n](int ix, int iy) { return iy * n + ix; };
  auto v_id = [n](int ix, int iy) { return n * (n + 1) + iy * (n + 1) + ix; };
  const int n_lattice = 2 * n * (n + 1);

  std::vector<int> adj(n_lattice, 0);
  for (const Cell& c : mesh.cells) {
    adj[h_id(c.ix, c.iy)]++;
    adj[h_id(c.ix, c.iy + 1)]++;
    adj[v_id(c.ix, c.iy)]++;
    adj[v_id(c.ix + 1, c.iy)]++;
  }

  std::vector<int> compact(n_lattice, -1);
  for (int iy = 0; iy <= n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      int id = h_id(ix, iy);
      if (adj[id] > 0) {
        compact[id] = static_cast<int>(mesh.edges.size());
        mesh.edges.push_back({EdgeDir::Horizontal, ix, iy, adj[id] == 1});
      }
    }
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix <= n; ++ix) {
      int id = v_id(ix, iy);
      if (adj[id] > 0) {
        compact[id] = static_cast<int>(mesh.edges.size());
        mesh.edges.push_back({EdgeDir::Vertical, ix, iy, adj[id] == 1});
      }
    }

  mesh.cell_edges.reserve(mesh.cells.size());
  mesh.cell_edge_signs.reserve(mesh.cells.size());
  for (const Cell& c : mesh.cells) {
    mesh.cell_edges.push_back({compact[h_id(c.ix, c.iy)],
                               compact[h_id(c.ix, c.iy + 1)],
                               compact[v_id(c.ix, c.iy)],
                               compact[v_id(c.ix + 1, c.iy)]});
    mesh.cell_edge_signs.push_back({+1, -1, -1, +1});
  }

  return mesh;
}

MacroPairing macro_pairing(const QuadMesh& mesh) {
  const int n = mesh.n_per_side;
  if (n % 2 != 0)
    throw std::invalid_argument("macro_pairing: N must be even");

  MacroPairing pairing;
  pairing.n_macro_per_side = n / 2;
  pairing.fine_to_macro.assign(mesh.cells.size(), -1);

  for (int J = 0; J < n / 2; ++J)
    for (int I = 0; I < n / 2; ++I) {
      std::array<int, 4> fine = {
          mesh.cell_at(2 * I, 2 * J), mesh.cell_at(2 * I + 1, 2 * J),
          mesh.cell_at(2 * I, 2 * J + 1), mesh.cell_at(2 * I + 1, 2 * J + 1)};
      int n_active = 0;
      for (int f : fine)
        if (f >= 0) n_active++;
      if (n_active == 0) continue;
      // Even-N L-shape masking removes whole macroelements only.
      assert(n_active == 4 && "macroelement straddles the removed quadrant");
      int m = pairing.n_macros();
      pairing.macro_cells.push_back(fine);
      pairing.macro_coords.push_back({I, J});
      for (int f : fine) pairing.fine_to_macro[f] = m;
    }

  return pairing;
}

std::vector<int> boundary_edges(const QuadMesh& mesh) {
  std::vector<int> result;
  for (int e = 0; e < mesh.n_edges(); ++e)
    if (mesh.edges[e].boundary) result.push_back(e);
  return result;
}

}  // namespace debyefem
