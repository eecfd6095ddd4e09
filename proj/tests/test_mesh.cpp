#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>

#include "debyefem/mesh.hpp"

using namespace debyefem;

TEST_CASE("unit square counts") {
  const QuadMesh m4 = build_mesh(DomainKind::UnitSquare, 4);
  CHECK(m4.n_cells() == 16);
  CHECK(m4.n_edges() == 40);
  CHECK(m4.h == doctest::Approx(0.25));

  const QuadMesh m32 = build_mesh(DomainKind::UnitSquare, 32);
  CHECK(m32.n_cells() == 1024);
  CHECK(m32.n_edges() == 2 * 32 * 33);
}

TEST_CASE("l-shape counts") {
  const QuadMesh m = build_mesh(DomainKind::LShape, 4);
  CHECK(m.n_cells() == 12);
  // no active cell has its center inside [0.5,1] x [0,0.5]
  for (const Cell& c : m.cells) {
    const double cx = (c.ix + 0.5) * m.h;
    const double cy = (c.iy + 0.5) * m.h;
    CHECK_FALSE((cx > 0.5 && cy < 0.5));
  }
}

TEST_CASE("boundary edge counts") {
  CHECK(boundary_edges(build_mesh(DomainKind::UnitSquare, 2)).size() == 8);
  CHECK(boundary_edges(build_mesh(DomainKind::UnitSquare, 4)).size() == 16);
  CHECK(boundary_edges(build_mesh(DomainKind::LShape, 4)).size() == 16);
}

TEST_CASE("boundary flag means exactly one adjacent active cell") {
  for (DomainKind kind : {DomainKind::UnitSquare, DomainKind::LShape}) {
    const QuadMesh m = build_mesh(kind, 6);
    std::map<int, int> incidence;
    for (int c = 0; c < m.n_cells(); ++c)
      for (int e : m.cell_edges[c]) incidence[e]++;
    for (int e = 0; e < m.n_edges(); ++e) {
      CHECK(incidence[e] >= 1);
      CHECK(incidence[e] <= 2);
      CHECK(m.edges[e].boundary == (incidence[e] == 1));
    }
  }
}

TEST_CASE("total area") {
  const QuadMesh sq = build_mesh(DomainKind::UnitSquare, 8);
  CHECK(sq.n_cells() * sq.h * sq.h == doctest::Approx(1.0).epsilon(1e-14));
  const QuadMesh el = build_mesh(DomainKind::LShape, 8);
  CHECK(el.n_cells() * el.h * el.h == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("interior edges carry opposite circulation signs") {
  const QuadMesh m = build_mesh(DomainKind::UnitSquare, 4);
  std::map<int, int> sign_sum, count;
  for (int c = 0; c < m.n_cells(); ++c)
    for (int a = 0; a < 4; ++a) {
      sign_sum[m.cell_edges[c][a]] += m.cell_edge_signs[c][a];
      count[m.cell_edges[c][a]]++;
    }
  for (int e = 0; e < m.n_edges(); ++e)
    if (count[e] == 2) CHECK(sign_sum[e] == 0);
}

TEST_CASE("construction is deterministic") {
  const QuadMesh a = build_mesh(DomainKind::LShape, 6);
  const QuadMesh b = build_mesh(DomainKind::LShape, 6);
  REQUIRE(a.n_edges() == b.n_edges());
  for (int e = 0; e < a.n_edges(); ++e) {
    CHECK(a.edges[e].ix == b.edges[e].ix);
    CHECK(a.edges[e].iy == b.edges[e].iy);
    CHECK(a.edges[e].dir == b.edges[e].dir);
  }
  CHECK(a.cell_edges == b.cell_edges);
}

TEST_CASE("macro pairing counts and coverage") {
  CHECK(macro_pairing(build_mesh(DomainKind::UnitSquare, 4)).n_macros() == 4);
  CHECK(macro_pairing(build_mesh(DomainKind::UnitSquare, 32)).n_macros() == 256);
  const QuadMesh el = build_mesh(DomainKind::LShape, 4);
  const MacroPairing p = macro_pairing(el);
  CHECK(p.n_macros() == 3);
  std::vector<int> covered(el.n_cells(), 0);
  for (const auto& quad : p.macro_cells)
    for (int c : quad) {
      REQUIRE(c >= 0);
      covered[c]++;
    }
  for (int c = 0; c < el.n_cells(); ++c) CHECK(covered[c] == 1);
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(build_mesh(DomainKind::UnitSquare, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(DomainKind::UnitSquare, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(DomainKind::LShape, 5), std::invalid_argument);
  CHECK_THROWS_AS(macro_pairing(build_mesh(DomainKind::UnitSquare, 3)),
                  std::invalid_argument);
}

TEST_CASE("locate_cell and cell_at agree") {
  const QuadMesh m = build_mesh(DomainKind::LShape, 4);
  CHECK(m.locate_cell(0.1, 0.1) == m.cell_at(0, 0));
  CHECK(m.locate_cell(0.9, 0.1) == -1);  // removed quadrant
  CHECK(m.locate_cell(0.9, 0.9) == m.cell_at(3, 3));
  CHECK(m.locate_cell(-0.1, 0.5) == -1);
}
