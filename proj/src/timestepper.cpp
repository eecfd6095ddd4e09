#include "debyefem/timestepper.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "debyefem/quadrature.hpp"

namespace debyefem {

double dt_admissible_bound(const PhysParams& params, const NonlinearLaw& law) {
  const double b = law.deriv_bound();
  const double d = params.eps_s - params.eps_inf;
  if (b <= 0.0) return std::numeric_limits<double>::infinity();
  return params.tau * (d + std::sqrt(d * d + 4.0 * b * d)) / (2.0 * b * d);
}

Stepper::Stepper(const QuadMesh& mesh, const PhysParams& params,
                 const NonlinearLaw& law, const StepperOptions& opts,
                 const VecFn& E0, const VecFn& E0_prime, const VecFn& P0)
    : mesh_(mesh), params_(params), law_(law), opts_(opts) {
  params_.validate();
  if (!(opts_.dt > 0.0))
    throw std::invalid_argument("Stepper: dt must be positive");
  const double bound = dt_admissible_bound(params_, law_);
  if (!(opts_.dt < bound)) {
    std::ostringstream msg;
    msg << "Stepper: dt = " << opts_.dt
        << " violates the coercivity admissibility bound dt < " << bound;
    throw std::invalid_argument(msg.str());
  }

  mass_ = assemble_mass(mesh_, opts_.quad_order);
  stiffness_ = assemble_stiffness(mesh_, opts_.quad_order);

  e_curr_ = interp_edge(mesh_, E0, opts_.quad_order);
  zero_boundary_dofs(mesh_, e_curr_);
  EdgeField e0p = interp_edge(mesh_, E0_prime, opts_.quad_order);
  zero_boundary_dofs(mesh_, e0p);
  e_prev_.coeffs.resize(e_curr_.coeffs.size());
  for (std::size_t k = 0; k < e_prev_.coeffs.size(); ++k)
    e_prev_.coeffs[k] = e_curr_.coeffs[k] - opts_.dt * e0p.coeffs[k];
  p_curr_ = project_W(mesh_, P0, opts_.quad_order);
}

EdgeField Stepper::step_E(const VecFn& g_E) const {
  const double dt = opts_.dt;
  const double c1 = params_.eps0 * params_.mu0 / (dt * dt);
  const double c2 = params_.a1() / dt;
  const double mu0 = params_.mu0;
  const double tau2 = params_.tau * params_.tau;

  bool range_exceeded = false;
  SparseOperator weighted = assemble_weighted_mass(mesh_, p_curr_, law_,
                                                   opts_.quad_order,
                                                   &range_exceeded);
  if (range_exceeded) diag_.law_range_warning = true;

  SparseOperator system = mass_;
  system.scale(c1 + c2);
  system.add_scaled(stiffness_, 1.0);
  system.add_scaled(weighted, -params_.a2());
  apply_dirichlet(mesh_, system);

  // rhs = M (c1 (2 E_{i-1} - E_{i-2}) + c2 E_{i-1})
  //       - (mu0/tau^2) load(f'(P_{i-1}) f(P_{i-1})) - mu0 load(g_i)
  std::vector<double> combo(e_curr_.coeffs.size());
  for (std::size_t k = 0; k < combo.size(); ++k)
    combo[k] = c1 * (2.0 * e_curr_.coeffs[k] - e_prev_.coeffs[k]) +
               c2 * e_curr_.coeffs[k];
  std::vector<double> rhs = mass_.matvec(combo);

  const std::vector<double> f_load = assemble_load(
      mesh_,
      [this](int c, double x, double y) -> std::array<double, 2> {
        const auto p = eval_cell_field(mesh_, p_curr_, c, x, y);
        return {law_.deriv(p[0]) * law_.eval(p[0]),
                law_.deriv(p[1]) * law_.eval(p[1])};
      },
      opts_.quad_order);
  const std::vector<double> g_load = assemble_load(mesh_, g_E, opts_.quad_order);
  for (std::size_t k = 0; k < rhs.size(); ++k)
    rhs[k] -= (mu0 / tau2) * f_load[k] + mu0 * g_load[k];
  apply_dirichlet_rhs(mesh_, rhs);

  EdgeField result;
  result.coeffs = e_curr_.coeffs;  // warm start
  SolveReport report = cg_solve(system, rhs, result.coeffs, opts_.linear_tol,
                                opts_.linear_max_iter, opts_.precond);
  if (report.indefinite)
    throw std::runtime_error(
        "step_E: E-system lost positive definiteness; the time step violates "
        "the coercivity admissibility bound");
  if (!report.converged)
    throw std::runtime_error("step_E: linear solver did not converge");
  diag_.total_linear_iters += report.iterations;
  diag_.max_linear_iters = std::max(diag_.max_linear_iters, report.iterations);
  return result;
}

CellField Stepper::step_P(const EdgeField& E_new, const VecFn& g_P,
                          const CellField* initial_guess) const {
  const double dt = opts_.dt;
  const double tau_dt = params_.tau / dt;
  const double coupling = params_.eps0 * (params_.eps_s - params_.eps_inf);
  const double area = mesh_.h * mesh_.h;
  const int nq = opts_.quad_order;
  const auto& nodes = gauss_nodes_1d(nq);
  const auto& weights = gauss_weights_1d(nq);

  // b = (tau/dt) M_W p_prev + coupling * load_W(E_new) + load_W(g_P)
  std::vector<double> b(4 * mesh_.cells.size(), 0.0);
  for (int c = 0; c < mesh_.n_cells(); ++c) {
    QuadRule rule = gauss_rule(nq, mesh_.cell_x0(c), mesh_.cell_y0(c),
                               mesh_.cell_x1(c), mesh_.cell_y1(c));
    const double cx = 0.5 * (mesh_.cell_x0(c) + mesh_.cell_x1(c));
    const double cy = 0.5 * (mesh_.cell_y0(c) + mesh_.cell_y1(c));
    for (int q = 0; q < rule.size(); ++q) {
      const auto ev = eval_edge_field(mesh_, E_new, c, rule.x[q], rule.y[q]);
      const auto gv = g_P(rule.x[q], rule.y[q]);
      const double v1 = coupling * ev[0] + gv[0];
      const double v2 = coupling * ev[1] + gv[1];
      const double xi = 2.0 * (rule.x[q] - cx) / mesh_.h;
      const double eta = 2.0 * (rule.y[q] - cy) / mesh_.h;
      b[4 * c + 0] += rule.w[q] * v1;
      b[4 * c + 1] += rule.w[q] * v1 * xi;
      b[4 * c + 2] += rule.w[q] * v2;
      b[4 * c + 3] += rule.w[q] * v2 * eta;
    }
    const double* pp = &p_curr_.coeffs[4 * c];
    b[4 * c + 0] += tau_dt * area * pp[0];
    b[4 * c + 1] += tau_dt * (area / 3.0) * pp[1];
    b[4 * c + 2] += tau_dt * area * pp[2];
    b[4 * c + 3] += tau_dt * (area / 3.0) * pp[3];
  }

  CellField result;
  result.coeffs.assign(4 * mesh_.cells.size(), 0.0);

  // Per-cell Newton on the 4x4 system (tau/dt) M_W p + F(p) = b.
  for (int c = 0; c < mesh_.n_cells(); ++c) {
    Eigen::Vector4d p;
    const double* start = initial_guess ? &initial_guess->coeffs[4 * c]
                                        : &p_curr_.coeffs[4 * c];
    for (int k = 0; k < 4; ++k) p(k) = start[k];

    const Eigen::Vector4d mw(tau_dt * area, tau_dt * area / 3.0, tau_dt * area,
                             tau_dt * area / 3.0);
    int iter = 0;
    for (;; ++iter) {
      Eigen::Vector4d residual = Eigen::Vector4d::Zero();
      Eigen::Matrix4d jac = Eigen::Matrix4d::Zero();
      for (int qj = 0; qj < nq; ++qj)
        for (int qi = 0; qi < nq; ++qi) {
          const double xi = nodes[qi], eta = nodes[qj];
          const double w = 0.25 * area * weights[qi] * weights[qj];
          const double p1 = p(0) + p(1) * xi;
          const double p2 = p(2) + p(3) * eta;
          diag_.max_abs_P =
              std::max({diag_.max_abs_P, std::abs(p1), std::abs(p2)});
          if (!law_.in_range(p1) || !law_.in_range(p2))
            diag_.law_range_warning = true;
          const double f1 = law_.eval(p1), fp1 = law_.deriv(p1);
          const double f2 = law_.eval(p2), fp2 = law_.deriv(p2);
          residual(0) += w * f1;
          residual(1) += w * f1 * xi;
          residual(2) += w * f2;
          residual(3) += w * f2 * eta;
          jac(0, 0) += w * fp1;
          jac(0, 1) += w * fp1 * xi;
          jac(1, 0) += w * fp1 * xi;
          jac(1, 1) += w * fp1 * xi * xi;
          jac(2, 2) += w * fp2;
          jac(2, 3) += w * fp2 * eta;
          jac(3, 2) += w * fp2 * eta;
          jac(3, 3) += w * fp2 * eta * eta;
        }
      for (int k = 0; k < 4; ++k) {
        residual(k) += mw(k) * p(k) - b[4 * c + k];
        jac(k, k) += mw(k);
      }
      if (residual.lpNorm<Eigen::Infinity>() <= opts_.newton_tol) break;
      if (iter >= opts_.newton_max_iter) {
        std::ostringstream msg;
        msg << "step_P: Newton failed to converge on cell " << c
            << " (last residual " << residual.lpNorm<Eigen::Infinity>() << ")";
        throw std::runtime_error(msg.str());
      }
      p -= jac.lu().solve(residual);
    }
    diag_.max_newton_iters = std::max(diag_.max_newton_iters, iter);
    for (int k = 0; k < 4; ++k) result.coeffs[4 * c + k] = p(k);
  }
  return result;
}

void Stepper::advance(const VecFn& g_E, const VecFn& g_P) {
  EdgeField e_new = step_E(g_E);
  CellField p_new = step_P(e_new, g_P);
  e_prev_ = std::move(e_curr_);
  e_curr_ = std::move(e_new);
  p_curr_ = std::move(p_new);
  step_index_++;
  diag_.steps_taken = step_index_;
}

RunResult run_simulation(const QuadMesh& mesh, const ExactCase& exact,
                         const PhysParams& params, const NonlinearLaw& law,
                         const StepperOptions& opts, int n_steps,
                         bool strict_paper_mode) {
  auto at0 = [](const SpaceTimeVecFn& f) {
    return [f](double x, double y) { return f(x, y, 0.0); };
  };
  Stepper stepper(mesh, params, law, opts, at0(exact.E), at0(exact.dt_E),
                  at0(exact.P));
  const VecFn zero = [](double, double) -> std::array<double, 2> {
    return {0.0, 0.0};
  };
  for (int i = 1; i <= n_steps; ++i) {
    const double t_i = i * opts.dt;  // sources sampled at the right endpoint
    const VecFn g_E = source_E(exact, params, law, t_i);
    const VecFn g_P =
        strict_paper_mode ? zero : source_P(exact, params, law, t_i);
    stepper.advance(g_E, g_P);
  }
  return {stepper.E_curr(), stepper.P_curr(), stepper.diagnostics()};
}

}  // namespace debyefem
