#include "debyefem/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "debyefem/linalg.hpp"
#include "debyefem/quadrature.hpp"

namespace debyefem {

ErrorReport compute_errors(const QuadMesh& mesh, const EdgeField& E,
                           const CellField& P, const ExactCase& exact, double t,
                           const MacroPairing* pairing, int quad_order) {
  ErrorReport report;
  report.n = mesh.n_per_side;

  std::optional<MacroField> post_E, post_P;
  if (pairing) {
    post_E = postprocess_E(mesh, *pairing, E);
    post_P = postprocess_P(mesh, *pairing, P);
  }

  double e2 = 0.0, p2 = 0.0, c2 = 0.0, se2 = 0.0, sp2 = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    QuadRule rule = gauss_rule(quad_order, mesh.cell_x0(c), mesh.cell_y0(c),
                               mesh.cell_x1(c), mesh.cell_y1(c));
    const double curl_h = eval_curl(mesh, E, c);
    const int m = pairing ? pairing->fine_to_macro[c] : -1;
    for (int q = 0; q < rule.size(); ++q) {
      const double x = rule.x[q], y = rule.y[q], w = rule.w[q];
      const auto e_ex = exact.E(x, y, t);
      const auto p_ex = exact.P(x, y, t);
      const auto e_h = eval_edge_field(mesh, E, c, x, y);
      const auto p_h = eval_cell_field(mesh, P, c, x, y);
      e2 += w * ((e_h[0] - e_ex[0]) * (e_h[0] - e_ex[0]) +
                 (e_h[1] - e_ex[1]) * (e_h[1] - e_ex[1]));
      p2 += w * ((p_h[0] - p_ex[0]) * (p_h[0] - p_ex[0]) +
                 (p_h[1] - p_ex[1]) * (p_h[1] - p_ex[1]));
      const double dc = curl_h - exact.curl_E(x, y, t);
      c2 += w * dc * dc;
      if (pairing) {
        const auto se = eval_macro_field(mesh, *pairing, *post_E, m, x, y);
        const auto sp = eval_macro_field(mesh, *pairing, *post_P, m, x, y);
        se2 += w * ((se[0] - e_ex[0]) * (se[0] - e_ex[0]) +
                    (se[1] - e_ex[1]) * (se[1] - e_ex[1]));
        sp2 += w * ((sp[0] - p_ex[0]) * (sp[0] - p_ex[0]) +
                    (sp[1] - p_ex[1]) * (sp[1] - p_ex[1]));
      }
    }
  }
  report.err_E = std::sqrt(e2);
  report.err_P = std::sqrt(p2);
  report.err_curl_E = std::sqrt(c2);
  if (pairing) {
    report.serr_E = std::sqrt(se2);
    report.serr_P = std::sqrt(sp2);
  }
  return report;
}

std::optional<double> convergence_order(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0)) return std::nullopt;
  return std::log2(err_coarse / err_fine);
}

ErrorReport run_case_row(const SimConfig& sim, int n) {
  const ExactCase exact = sim.exact();
  const QuadMesh mesh = build_mesh(exact.domain_kind, n);
  std::optional<MacroPairing> pairing;
  if (sim.postprocess) pairing = macro_pairing(mesh);

  const auto start = std::chrono::steady_clock::now();
  RunResult result =
      run_simulation(mesh, exact, sim.params(), sim.law(), sim.stepper,
                     sim.n_steps, sim.strict_paper_mode);
  const auto stop = std::chrono::steady_clock::now();

  const double t_final = sim.n_steps * sim.stepper.dt;
  ErrorReport report = compute_errors(mesh, result.E, result.P, exact, t_final,
                                      pairing ? &*pairing : nullptr,
                                      sim.stepper.quad_order);
  report.diagnostics = result.diagnostics;
  report.runtime_seconds =
      std::chrono::duration<double>(stop - start).count();
  return report;
}

namespace {

std::string fmt_real(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string fmt_order(const std::optional<double>& order) {
  return order ? fmt_real(*order) : std::string("—");
}

}  // namespace

std::string converge_csv(const SimConfig& sim) {
  std::ostringstream csv;
  csv << "N,errE,orderE,errP,orderP,errCurlE,orderCurl";
  if (sim.postprocess) csv << ",SerrE,orderSE,SerrP,orderSP";
  csv << "\n";

  std::optional<ErrorReport> prev;
  for (int n : sim.n_list) {
    ErrorReport row = run_case_row(sim, n);
    auto order = [&prev](double prev_err, double err) {
      return prev ? convergence_order(prev_err, err) : std::nullopt;
    };
    csv << n << ',' << fmt_real(row.err_E) << ','
        << fmt_order(order(prev ? prev->err_E : 0.0, row.err_E)) << ','
        << fmt_real(row.err_P) << ','
        << fmt_order(order(prev ? prev->err_P : 0.0, row.err_P)) << ','
        << fmt_real(row.err_curl_E) << ','
        << fmt_order(order(prev ? prev->err_curl_E : 0.0, row.err_curl_E));
    if (sim.postprocess)
      csv << ',' << fmt_real(*row.serr_E) << ','
          << fmt_order(order(prev ? *prev->serr_E : 0.0, *row.serr_E)) << ','
          << fmt_real(*row.serr_P) << ','
          << fmt_order(order(prev ? *prev->serr_P : 0.0, *row.serr_P));
    csv << "\n";
    prev = row;
  }
  return csv.str();
}

namespace {

void write_grid_file(const std::filesystem::path& path,
                     const std::string& case_name, int n, double t,
                     const std::string& component,
                     const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# case=" << case_name << " N=" << n << " t=" << fmt_real(t)
      << " component=" << component << "\n";
  out << "# rows=" << n << " cols=" << n << " layout=row-major\n";
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      if (ix) out << ' ';
      out << fmt_real(values[static_cast<std::size_t>(iy) * n + ix]);
    }
    out << "\n";
  }
}

void write_vector_file(const std::filesystem::path& path,
                       const std::string& case_name, int n, double t,
                       const std::string& field_name,
                       const std::vector<std::array<double, 4>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# case=" << case_name << " N=" << n << " t=" << fmt_real(t)
      << " field=" << field_name << "\n";
  out << "# columns: x y u v\n";
  for (const auto& r : rows)
    out << fmt_real(r[0]) << ' ' << fmt_real(r[1]) << ' ' << fmt_real(r[2])
        << ' ' << fmt_real(r[3]) << "\n";
}

}  // namespace

void write_snapshots(const SimConfig& sim, const std::string& out_dir) {
  const ExactCase exact = sim.exact();
  const int n = sim.n;
  const QuadMesh mesh = build_mesh(exact.domain_kind, n);
  std::optional<MacroPairing> pairing;
  if (sim.postprocess) pairing = macro_pairing(mesh);

  RunResult result =
      run_simulation(mesh, exact, sim.params(), sim.law(), sim.stepper,
                     sim.n_steps, sim.strict_paper_mode);
  const double t = sim.n_steps * sim.stepper.dt;

  std::optional<MacroField> post_E, post_P;
  if (pairing) {
    post_E = postprocess_E(mesh, *pairing, result.E);
    post_P = postprocess_P(mesh, *pairing, result.P);
  }

  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);

  // cell-center samples; inactive cells (L-shape) sample as zero
  const std::size_t n_grid = static_cast<std::size_t>(n) * n;
  std::map<std::string, std::vector<double>> grids;
  for (const char* name : {"E1", "E2", "P1", "P2", "err_E1", "err_E2",
                           "err_P1", "err_P2"})
    grids[name].assign(n_grid, 0.0);
  if (pairing)
    for (const char* name : {"post_E1", "post_E2", "post_P1", "post_P2"})
      grids[name].assign(n_grid, 0.0);

  std::vector<std::array<double, 4>> vec_E, vec_P, vec_post_E, vec_post_P;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const int ix = mesh.cells[c].ix, iy = mesh.cells[c].iy;
    const std::size_t g = static_cast<std::size_t>(iy) * n + ix;
    const double x = (ix + 0.5) * mesh.h, y = (iy + 0.5) * mesh.h;
    const auto e_h = eval_edge_field(mesh, result.E, c, x, y);
    const auto p_h = eval_cell_field(mesh, result.P, c, x, y);
    const auto e_ex = exact.E(x, y, t);
    const auto p_ex = exact.P(x, y, t);
    grids["E1"][g] = e_h[0];
    grids["E2"][g] = e_h[1];
    grids["P1"][g] = p_h[0];
    grids["P2"][g] = p_h[1];
    grids["err_E1"][g] = e_h[0] - e_ex[0];
    grids["err_E2"][g] = e_h[1] - e_ex[1];
    grids["err_P1"][g] = p_h[0] - p_ex[0];
    grids["err_P2"][g] = p_h[1] - p_ex[1];
    vec_E.push_back({x, y, e_h[0], e_h[1]});
    vec_P.push_back({x, y, p_h[0], p_h[1]});
    if (pairing) {
      const int m = pairing->fine_to_macro[c];
      const auto se = eval_macro_field(mesh, *pairing, *post_E, m, x, y);
      const auto sp = eval_macro_field(mesh, *pairing, *post_P, m, x, y);
      grids["post_E1"][g] = se[0];
      grids["post_E2"][g] = se[1];
      grids["post_P1"][g] = sp[0];
      grids["post_P2"][g] = sp[1];
      vec_post_E.push_back({x, y, se[0], se[1]});
      vec_post_P.push_back({x, y, sp[0], sp[1]});
    }
  }

  for (const auto& [name, values] : grids)
    write_grid_file(dir / (name + ".dat"), sim.case_name, n, t, name, values);
  write_vector_file(dir / "E_vec.dat", sim.case_name, n, t, "E", vec_E);
  write_vector_file(dir / "P_vec.dat", sim.case_name, n, t, "P", vec_P);
  if (pairing) {
    write_vector_file(dir / "post_E_vec.dat", sim.case_name, n, t, "post_E",
                      vec_post_E);
    write_vector_file(dir / "post_P_vec.dat", sim.case_name, n, t, "post_P",
                      vec_post_P);
  }
}

// ---------------------------------------------------------------------------
// built-in check suite

namespace {

struct CheckContext {
  std::ostream& out;
  int failures = 0;

  void report(const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!pass) failures++;
  }
};

// Independent dense Gram computation: re-derives the local shape functions
// from their defining formulas instead of going through assembly.
std::vector<std::vector<double>> dense_gram(const QuadMesh& mesh,
                                            bool curl_form) {
  const int n = mesh.n_edges();
  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const double x0 = mesh.cell_x0(c), y0 = mesh.cell_y0(c);
    const double x1 = mesh.cell_x1(c), y1 = mesh.cell_y1(c);
    QuadRule rule = gauss_rule(8, x0, y0, x1, y1);
    for (int q = 0; q < rule.size(); ++q) {
      const double x = rule.x[q], y = rule.y[q];
      const double hx = x1 - x0, hy = y1 - y0;
      const std::array<std::array<double, 2>, 4> phi = {
          {{(y1 - y) / hy, 0.0},
           {(y - y0) / hy, 0.0},
           {0.0, (x1 - x) / hx},
           {0.0, (x - x0) / hx}}};
      const std::array<double, 4> curl = {1.0 / hy, -1.0 / hy, -1.0 / hx,
                                          1.0 / hx};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const double integrand =
              curl_form ? curl[a] * curl[b]
                        : phi[a][0] * phi[b][0] + phi[a][1] * phi[b][1];
          gram[mesh.cell_edges[c][a]][mesh.cell_edges[c][b]] +=
              rule.w[q] * integrand;
        }
    }
  }
  return gram;
}

double max_entry_diff(const SparseOperator& A,
                      const std::vector<std::vector<double>>& dense) {
  auto a_dense = to_dense(A);
  double worst = 0.0;
  for (int r = 0; r < A.n; ++r)
    for (int c = 0; c < A.n; ++c)
      worst = std::max(worst, std::abs(a_dense[r][c] - dense[r][c]));
  return worst;
}

double bisect_scalar_p(double tau, double dt, double p0, double rhs,
                       const NonlinearLaw& law) {
  // root of tau (p - p0)/dt + f(p) - rhs = 0; monotone increasing in p
  auto g = [&](double p) { return tau * (p - p0) / dt + law.eval(p) - rhs; };
  double lo = -64.0, hi = 64.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int run_checks(std::ostream& out, bool corrupt_stiffness) {
  CheckContext ctx{out};
  const QuadMesh mesh = build_mesh(DomainKind::UnitSquare, 2);

  {
    SparseOperator mass = assemble_mass(mesh);
    const double diff = max_entry_diff(mass, dense_gram(mesh, false));
    ctx.report("mass-dense-oracle", diff <= 1e-11,
               "max entry diff " + fmt_real(diff));
  }
  {
    SparseOperator stiffness = assemble_stiffness(mesh);
    if (corrupt_stiffness && !stiffness.vals.empty())
      stiffness.vals[1] += 1e-3;
    const double diff = max_entry_diff(stiffness, dense_gram(mesh, true));
    ctx.report("stiffness-dense-oracle", diff <= 1e-11,
               "max entry diff " + fmt_real(diff));
    const double asym = stiffness.max_asymmetry();
    ctx.report("stiffness-symmetry", asym <= 1e-12,
               "max asymmetry " + fmt_real(asym));
  }
  {
    // weighted mass with the linear law must equal the plain mass
    CellField p = project_W(mesh, [](double x, double y) {
      return std::array<double, 2>{x, y};
    });
    SparseOperator weighted =
        assemble_weighted_mass(mesh, p, NonlinearLaw::linear(1.0));
    SparseOperator mass = assemble_mass(mesh);
    double worst = 0.0;
    for (std::size_t k = 0; k < mass.vals.size(); ++k)
      worst = std::max(worst, std::abs(mass.vals[k] - weighted.vals[k]));
    ctx.report("weighted-mass-linear-law", worst <= 1e-12,
               "max entry diff " + fmt_real(worst));
  }
  {
    // elementwise L2 projection orthogonality against every W_h basis fn
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double a = unif(rng), b = unif(rng), c = unif(rng), d = unif(rng);
      VecFn v = [=](double x, double y) -> std::array<double, 2> {
        return {std::sin(a * x + b * y) + c * x * y,
                std::cos(b * x - a * y) + d * x * x};
      };
      CellField proj = project_W(mesh, v, 8);
      double norm2_v = 0.0;
      double moment = 0.0;
      for (int cell = 0; cell < mesh.n_cells(); ++cell) {
        QuadRule rule = gauss_rule(8, mesh.cell_x0(cell), mesh.cell_y0(cell),
                                   mesh.cell_x1(cell), mesh.cell_y1(cell));
        const double cx = 0.5 * (mesh.cell_x0(cell) + mesh.cell_x1(cell));
        const double cy = 0.5 * (mesh.cell_y0(cell) + mesh.cell_y1(cell));
        double m[4] = {0, 0, 0, 0};
        for (int q = 0; q < rule.size(); ++q) {
          const auto vv = v(rule.x[q], rule.y[q]);
          const auto ph = eval_cell_field(mesh, proj, cell, rule.x[q], rule.y[q]);
          const double xi = 2.0 * (rule.x[q] - cx) / mesh.h;
          const double eta = 2.0 * (rule.y[q] - cy) / mesh.h;
          m[0] += rule.w[q] * (ph[0] - vv[0]);
          m[1] += rule.w[q] * (ph[0] - vv[0]) * xi;
          m[2] += rule.w[q] * (ph[1] - vv[1]);
          m[3] += rule.w[q] * (ph[1] - vv[1]) * eta;
          norm2_v += rule.w[q] * (vv[0] * vv[0] + vv[1] * vv[1]);
        }
        for (double mk : m) moment = std::max(moment, std::abs(mk));
      }
      worst = std::max(worst, moment / std::sqrt(norm2_v));
    }
    ctx.report("projection-orthogonality", worst <= 1e-10,
               "max scaled moment " + fmt_real(worst));
  }
  {
    // postprocessing reproduces globally bilinear fields
    const QuadMesh mesh4 = build_mesh(DomainKind::UnitSquare, 4);
    const MacroPairing pairing = macro_pairing(mesh4);
    VecFn bilinear = [](double x, double y) -> std::array<double, 2> {
      return {1.0 + 2.0 * x - y + 0.5 * x * y, -2.0 + x + 3.0 * y - x * y};
    };
    EdgeField ef = interp_edge(mesh4, bilinear, 8);
    CellField cf = project_W(mesh4, bilinear, 8);
    MacroField pe = postprocess_E(mesh4, pairing, ef);
    MacroField pp = postprocess_P(mesh4, pairing, cf);
    double worst = 0.0;
    for (int c = 0; c < mesh4.n_cells(); ++c) {
      const int m = pairing.fine_to_macro[c];
      for (double fx : {0.3, 0.8})
        for (double fy : {0.2, 0.7}) {
          const double x = mesh4.cell_x0(c) + fx * mesh4.h;
          const double y = mesh4.cell_y0(c) + fy * mesh4.h;
          const auto expected = bilinear(x, y);
          const auto got_e = eval_macro_field(mesh4, pairing, pe, m, x, y);
          const auto got_p = eval_macro_field(mesh4, pairing, pp, m, x, y);
          for (int k = 0; k < 2; ++k) {
            worst = std::max(worst, std::abs(got_e[k] - expected[k]));
            worst = std::max(worst, std::abs(got_p[k] - expected[k]));
          }
        }
    }
    ctx.report("postprocess-bilinear-reproduction", worst <= 1e-12,
               "max pointwise diff " + fmt_real(worst));
  }
  {
    // per-cell Newton against a scalar bisection oracle on constant data
    const PhysParams params;
    const NonlinearLaw law = NonlinearLaw::cubic(1.0, 1.0);
    StepperOptions opts;
    opts.dt = 1e-3;
    VecFn e0 = [](double, double) -> std::array<double, 2> { return {0, 0}; };
    VecFn p0 = [](double, double) -> std::array<double, 2> {
      return {0.25, -0.5};
    };
    Stepper stepper(mesh, params, law, opts, e0, e0, p0);
    VecFn g_p = [](double, double) -> std::array<double, 2> {
      return {0.7, -0.3};
    };
    EdgeField e_zero;
    e_zero.coeffs.assign(mesh.edges.size(), 0.0);
    CellField p_new = stepper.step_P(e_zero, g_p);
    const double root1 = bisect_scalar_p(params.tau, opts.dt, 0.25, 0.7, law);
    const double root2 = bisect_scalar_p(params.tau, opts.dt, -0.5, -0.3, law);
    double worst = 0.0;
    for (int c = 0; c < mesh.n_cells(); ++c) {
      worst = std::max(worst, std::abs(p_new.coeffs[4 * c + 0] - root1));
      worst = std::max(worst, std::abs(p_new.coeffs[4 * c + 2] - root2));
      worst = std::max(worst, std::abs(p_new.coeffs[4 * c + 1]));
      worst = std::max(worst, std::abs(p_new.coeffs[4 * c + 3]));
    }
    ctx.report("newton-vs-bisection", worst <= 1e-12,
               "max diff " + fmt_real(worst));
  }
  {
    // one manufactured E-step: CG path against the dense LU oracle
    const ExactCase exact = example1();
    const PhysParams params;
    const NonlinearLaw law = NonlinearLaw::linear(0.0);
    StepperOptions opts;
    opts.dt = 1e-4;
    auto at0 = [&exact](const SpaceTimeVecFn& f) {
      return [f](double x, double y) { return f(x, y, 0.0); };
    };
    Stepper stepper(mesh, params, law, opts, at0(exact.E), at0(exact.dt_E),
                    at0(exact.P));
    EdgeField via_cg = stepper.step_E(source_E(exact, params, law, opts.dt));

    // rebuild the same eliminated system densely
    const double c1 = params.eps0 * params.mu0 / (opts.dt * opts.dt);
    const double cc2 = params.a1() / opts.dt;
    SparseOperator system = assemble_mass(mesh, opts.quad_order);
    system.scale(c1 + cc2);
    system.add_scaled(assemble_stiffness(mesh, opts.quad_order), 1.0);
    apply_dirichlet(mesh, system);
    std::vector<double> combo(stepper.E_curr().coeffs.size());
    for (std::size_t k = 0; k < combo.size(); ++k)
      combo[k] = (c1 + cc2) * stepper.E_curr().coeffs[k] +
                 c1 * (stepper.E_curr().coeffs[k] - stepper.E_prev().coeffs[k]);
    SparseOperator mass = assemble_mass(mesh, opts.quad_order);
    std::vector<double> rhs = mass.matvec(combo);
    const std::vector<double> g_load = assemble_load(
        mesh, source_E(exact, params, law, opts.dt), opts.quad_order);
    for (std::size_t k = 0; k < rhs.size(); ++k)
      rhs[k] -= params.mu0 * g_load[k];
    apply_dirichlet_rhs(mesh, rhs);
    const std::vector<double> via_lu = dense_solve(to_dense(system), rhs);
    double worst = 0.0;
    for (std::size_t k = 0; k < rhs.size(); ++k)
      worst = std::max(worst, std::abs(via_cg.coeffs[k] - via_lu[k]));
    ctx.report("cg-vs-dense-lu", worst <= 1e-10, "max diff " + fmt_real(worst));
  }

  out << (ctx.failures == 0 ? "all checks passed"
                            : std::to_string(ctx.failures) + " check(s) failed")
      << "\n";
  return ctx.failures;
}

}  // namespace debyefem
