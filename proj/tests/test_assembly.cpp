#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "debyefem/assembly.hpp"
#include "debyefem/linalg.hpp"
#include "debyefem/manufactured.hpp"
#include "debyefem/mesh.hpp"
#include "debyefem/quadrature.hpp"
#include "debyefem/spaces.hpp"

using namespace debyefem;

namespace {

// Brute-force dense Gram oracle with its own copy of the shape-function
// formulas, independent of the assembly path.
enum class Form { Mass, Stiffness, WeightedMass };

std::vector<std::vector<double>> dense_oracle(
    const QuadMesh& mesh, Form form, const CellField* p_prev = nullptr,
    const NonlinearLaw* law = nullptr) {
  const int n = mesh.n_edges();
  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const double x0 = mesh.cell_x0(c), y0 = mesh.cell_y0(c);
    const double x1 = mesh.cell_x1(c), y1 = mesh.cell_y1(c);
    const double hx = x1 - x0, hy = y1 - y0;
    const QuadRule rule = gauss_rule(7, x0, y0, x1, y1);
    for (int q = 0; q < rule.size(); ++q) {
      const double x = rule.x[q], y = rule.y[q];
      const double phi[4][2] = {{(y1 - y) / hy, 0.0},
                                {(y - y0) / hy, 0.0},
                                {0.0, (x1 - x) / hx},
                                {0.0, (x - x0) / hx}};
      const double curl[4] = {1.0 / hy, -1.0 / hy, -1.0 / hx, 1.0 / hx};
      double w1 = 1.0, w2 = 1.0;
      if (form == Form::WeightedMass) {
        const auto pv = eval_cell_field(mesh, *p_prev, c, x, y);
        w1 = law->deriv(pv[0]);
        w2 = law->deriv(pv[1]);
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const double integrand =
              form == Form::Stiffness
                  ? curl[a] * curl[b]
                  : w1 * phi[a][0] * phi[b][0] + w2 * phi[a][1] * phi[b][1];
          gram[mesh.cell_edges[c][a]][mesh.cell_edges[c][b]] +=
              rule.w[q] * integrand;
        }
    }
  }
  return gram;
}

double max_diff(const SparseOperator& sparse,
                const std::vector<std::vector<double>>& dense) {
  const auto got = to_dense(sparse);
  double worst = 0.0;
  for (int r = 0; r < sparse.n; ++r)
    for (int c = 0; c < sparse.n; ++c)
      worst = std::max(worst, std::abs(got[r][c] - dense[r][c]));
  return worst;
}

double quadratic_form(const SparseOperator& a, const std::vector<double>& x) {
  const auto ax = a.matvec(x);
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) sum += x[k] * ax[k];
  return sum;
}

}  // namespace

TEST_CASE("dense oracle equivalence on N=2") {
  for (DomainKind kind : {DomainKind::UnitSquare, DomainKind::LShape}) {
    const int n = kind == DomainKind::UnitSquare ? 2 : 4;
    const QuadMesh mesh = build_mesh(kind, n);
    CHECK(max_diff(assemble_mass(mesh), dense_oracle(mesh, Form::Mass)) <=
          1e-11);
    CHECK(max_diff(assemble_stiffness(mesh),
                   dense_oracle(mesh, Form::Stiffness)) <= 1e-11);
    const NonlinearLaw law = NonlinearLaw::cubic(1.0, 1.0);
    const CellField p = project_W(mesh, [](double x, double y) {
      return std::array<double, 2>{std::sin(3 * x), x * y - 0.4};
    });
    CHECK(max_diff(assemble_weighted_mass(mesh, p, law),
                   dense_oracle(mesh, Form::WeightedMass, &p, &law)) <= 1e-11);
  }
}

TEST_CASE("symmetry and definiteness") {
  const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, 4);
  const SparseOperator m = assemble_mass(mesh);
  const SparseOperator k = assemble_stiffness(mesh);
  CHECK(m.max_asymmetry() <= 1e-12);
  CHECK(k.max_asymmetry() <= 1e-12);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(m.n);
    for (double& v : x) v = unif(rng);
    CHECK(quadratic_form(m, x) > 0.0);
    CHECK(quadratic_form(k, x) >= -1e-12);
  }
}

TEST_CASE("quadratic forms of known fields") {
  const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, 2);
  const SparseOperator m = assemble_mass(mesh);
  const SparseOperator k = assemble_stiffness(mesh);

  const EdgeField constant = interp_edge(mesh, [](double, double) {
    return std::array<double, 2>{1.0, 0.0};
  });
  CHECK(quadratic_form(m, constant.coeffs) ==
        doctest::Approx(1.0).epsilon(1e-13));
  for (double v : k.matvec(constant.coeffs))
    CHECK(v == doctest::Approx(0.0).epsilon(1e-13));

  const EdgeField rot = interp_edge(mesh, [](double x, double y) {
    return std::array<double, 2>{-y, x};
  });
  CHECK(quadratic_form(k, rot.coeffs) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("weighted mass special cases") {
  const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, 2);
  const SparseOperator m = assemble_mass(mesh);
  const CellField arbitrary = project_W(mesh, [](double x, double y) {
    return std::array<double, 2>{y - x, x + 0.3};
  });

  SUBCASE("linear law equals plain mass") {
    const SparseOperator w =
        assemble_weighted_mass(mesh, arbitrary, NonlinearLaw::linear(1.0));
    for (std::size_t i = 0; i < m.vals.size(); ++i)
      CHECK(w.vals[i] == doctest::Approx(m.vals[i]).epsilon(1e-12));
  }

  SUBCASE("cubic law at P = 0 equals plain mass") {
    CellField zero;
    zero.coeffs.assign(4 * mesh.cells.size(), 0.0);
    const SparseOperator w =
        assemble_weighted_mass(mesh, zero, NonlinearLaw::cubic(1.0, 1.0));
    for (std::size_t i = 0; i < m.vals.size(); ++i)
      CHECK(w.vals[i] == doctest::Approx(m.vals[i]).epsilon(1e-12));
  }

  SUBCASE("cubic law at P = (1,1) equals 4M") {
    const CellField ones = project_W(mesh, [](double, double) {
      return std::array<double, 2>{1.0, 1.0};
    });
    const SparseOperator w =
        assemble_weighted_mass(mesh, ones, NonlinearLaw::cubic(1.0, 1.0));
    for (std::size_t i = 0; i < m.vals.size(); ++i)
      CHECK(w.vals[i] == doctest::Approx(4.0 * m.vals[i]).epsilon(1e-12));
  }

  SUBCASE("range flag raised when P leaves the declared range") {
    const CellField big = project_W(mesh, [](double, double) {
      return std::array<double, 2>{20.0, 0.0};
    });
    bool exceeded = false;
    assemble_weighted_mass(mesh, big, NonlinearLaw::cubic(1.0, 1.0), 5,
                           &exceeded);
    CHECK(exceeded);
    exceeded = false;
    assemble_weighted_mass(mesh, arbitrary, NonlinearLaw::cubic(1.0, 1.0), 5,
                           &exceeded);
    CHECK_FALSE(exceeded);
  }
}

TEST_CASE("load vectors") {
  const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, 2);

  SUBCASE("zero source") {
    const auto load = assemble_load(mesh, VecFn([](double, double) {
                                      return std::array<double, 2>{0.0, 0.0};
                                    }));
    for (double v : load) CHECK(v == 0.0);
  }

  SUBCASE("constant source equals mass times its interpolant") {
    const VecFn g = [](double, double) {
      return std::array<double, 2>{1.0, 0.0};
    };
    const auto load = assemble_load(mesh, g);
    const auto mv = assemble_mass(mesh).matvec(interp_edge(mesh, g).coeffs);
    for (std::size_t i = 0; i < load.size(); ++i)
      CHECK(load[i] == doctest::Approx(mv[i]).epsilon(1e-12));
  }

  SUBCASE("W_h load of a constant matches the scaled Gram diagonal") {
    const auto load = assemble_load_W(mesh, [](double, double) {
      return std::array<double, 2>{2.0, -1.0};
    });
    const double area = mesh.h * mesh.h;
    for (int c = 0; c < mesh.n_cells(); ++c) {
      CHECK(load[4 * c + 0] == doctest::Approx(2.0 * area).epsilon(1e-13));
      CHECK(load[4 * c + 1] == doctest::Approx(0.0));
      CHECK(load[4 * c + 2] == doctest::Approx(-1.0 * area).epsilon(1e-13));
      CHECK(load[4 * c + 3] == doctest::Approx(0.0));
    }
  }

  SUBCASE("bit-exact reproducibility") {
    const ExactCase c = example1();
    const VecFn g = source_E(c, PhysParams{}, NonlinearLaw::cubic(1.0, 1.0),
                             0.0);
    const auto a = assemble_load(mesh, g);
    const auto b = assemble_load(mesh, g);
    CHECK(a == b);
  }
}

TEST_CASE("mass quadratic form converges to the L2 norm with order >= 2") {
  const VecFn u = [](double x, double y) {
    return std::array<double, 2>{std::sin(2 * x + y), std::cos(x - y)};
  };
  double exact = 0.0;
  {
    const QuadRule rule = gauss_rule(12, 0, 0, 1, 1);
    for (int q = 0; q < rule.size(); ++q) {
      const auto v = u(rule.x[q], rule.y[q]);
      exact += rule.w[q] * (v[0] * v[0] + v[1] * v[1]);
    }
  }
  double prev_err = 0.0;
  for (int n : {4, 8, 16, 32}) {
    const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, n);
    const double got = quadratic_form(assemble_mass(mesh),
                                      interp_edge(mesh, u).coeffs);
    const double err = std::abs(got - exact);
    if (prev_err > 0.0) CHECK(std::log2(prev_err / err) >= 2.0 - 0.2);
    prev_err = err;
  }
}

TEST_CASE("operator algebra guards") {
  const QuadMesh m2 = build_mesh(DomainKind::UnitSquare, 2);
  const QuadMesh m4 = build_mesh(DomainKind::UnitSquare, 4);
  SparseOperator a = assemble_mass(m2);
  CHECK_THROWS_AS(a.add_scaled(assemble_mass(m4), 1.0), std::invalid_argument);
}

TEST_CASE("dirichlet elimination keeps symmetry and pins boundary rows") {
  const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, 4);
  SparseOperator sys = assemble_mass(mesh);
  sys.add_scaled(assemble_stiffness(mesh), 1.0);
  apply_dirichlet(mesh, sys);
  CHECK(sys.max_asymmetry() <= 1e-12);
  const auto dense = to_dense(sys);
  for (int e : boundary_edges(mesh)) {
    for (int j = 0; j < sys.n; ++j) {
      if (j == e) continue;
      CHECK(dense[e][j] == 0.0);
      CHECK(dense[j][e] == 0.0);
    }
    CHECK(dense[e][e] == 1.0);
  }
}
