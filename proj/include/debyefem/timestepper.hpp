/**
 * @file timestepper.hpp
 * @brief Decoupled time stepping: one linear sparse solve for the electric
 *        field followed by element-local monotone Newton solves for the
 *        polarization.
 */

#ifndef DEBYEFEM_TIMESTEPPER_HPP
#define DEBYEFEM_TIMESTEPPER_HPP

#include <optional>
#include <vector>

#include "debyefem/assembly.hpp"
#include "debyefem/linalg.hpp"
#include "debyefem/manufactured.hpp"
#include "debyefem/mesh.hpp"
#include "debyefem/nonlinearity.hpp"
#include "debyefem/spaces.hpp"

namespace debyefem {

struct StepperOptions {
  double dt = 1e-5;
  double newton_tol = 1e-12;
  int newton_max_iter = 25;
  double linear_tol = 1e-10;
  int linear_max_iter = 2000;
  Precond precond = Precond::Jacobi;
  int quad_order = 5;
};

struct RunDiagnostics {
  int steps_taken = 0;
  int total_linear_iters = 0;
  int max_linear_iters = 0;
  int max_newton_iters = 0;
  double max_abs_P = 0.0;  ///< max |P| seen at quadrature points
  bool law_range_warning = false;
};

/// Largest admissible time step keeping the per-step E-form coercive:
/// dt < [tau*d + tau*sqrt(d^2 + 4 B d)] / (2 B d) with d = eps_s - eps_inf.
/// Returns +inf when the law's derivative bound B is zero.
double dt_admissible_bound(const PhysParams& params, const NonlinearLaw& law);

class Stepper {
 public:
  /// Initial state: E_curr = interp of E0, P_curr = projection of P0, and the
  /// ghost E_prev = interp(E0) - dt * interp(E0'). Rejects inadmissible dt.
  Stepper(const QuadMesh& mesh, const PhysParams& params,
          const NonlinearLaw& law, const StepperOptions& opts, const VecFn& E0,
          const VecFn& E0_prime, const VecFn& P0);

  /// Linear solve of the E-equation at the next step, using P_curr.
  /// Does not mutate the state.
  EdgeField step_E(const VecFn& g_E) const;

  /// Element-local Newton solves of the P-equation given the new E field.
  /// Does not mutate the state. An explicit initial guess (instead of the
  /// warm start P_curr) may be supplied for uniqueness checks.
  CellField step_P(const EdgeField& E_new, const VecFn& g_P,
                   const CellField* initial_guess = nullptr) const;

  /// One full step: step_E then step_P, then rotate the state.
  void advance(const VecFn& g_E, const VecFn& g_P);

  const EdgeField& E_curr() const { return e_curr_; }
  const EdgeField& E_prev() const { return e_prev_; }
  const CellField& P_curr() const { return p_curr_; }
  int step_index() const { return step_index_; }
  const RunDiagnostics& diagnostics() const { return diag_; }
  const QuadMesh& mesh() const { return mesh_; }

 private:
  const QuadMesh& mesh_;
  PhysParams params_;
  NonlinearLaw law_;
  StepperOptions opts_;
  SparseOperator mass_;
  SparseOperator stiffness_;
  EdgeField e_curr_;   // E_{i-1}
  EdgeField e_prev_;   // E_{i-2}
  CellField p_curr_;   // P_{i-1}
  int step_index_ = 0;
  mutable RunDiagnostics diag_;
};

struct RunResult {
  EdgeField E;
  CellField P;
  RunDiagnostics diagnostics;
};

/// Drive a manufactured-case simulation for n_steps steps of size opts.dt.
/// In strict paper mode the P-equation source is forced to zero.
RunResult run_simulation(const QuadMesh& mesh, const ExactCase& exact,
                         const PhysParams& params, const NonlinearLaw& law,
                         const StepperOptions& opts, int n_steps,
                         bool strict_paper_mode = false);

}  // namespace debyefem

#endif
