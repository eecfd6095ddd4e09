/**
 * @file harness.hpp
 * @brief Error norms, convergence tables, field snapshot export, and the
 *        built-in oracle/property check suite.
 */

#ifndef DEBYEFEM_HARNESS_HPP
#define DEBYEFEM_HARNESS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "debyefem/config.hpp"
#include "debyefem/manufactured.hpp"
#include "debyefem/mesh.hpp"
#include "debyefem/postprocess.hpp"
#include "debyefem/spaces.hpp"
#include "debyefem/timestepper.hpp"

namespace debyefem {

struct ErrorReport {
  int n = 0;
  double err_E = 0.0;
  double err_P = 0.0;
  double err_curl_E = 0.0;
  std::optional<double> serr_E;
  std::optional<double> serr_P;
  RunDiagnostics diagnostics;
  double runtime_seconds = 0.0;
};

/// L2 error norms of the computed fields against the exact case at time t.
/// Pass a macro pairing to also fill the superconvergence columns.
ErrorReport compute_errors(const QuadMesh& mesh, const EdgeField& E,
                           const CellField& P, const ExactCase& exact, double t,
                           const MacroPairing* pairing = nullptr,
                           int quad_order = 5);

/// order = log2(err_{N/2} / err_N); empty when undefined.
std::optional<double> convergence_order(double err_coarse, double err_fine);

/// One simulation at sim.n (a single row of the sweep).
ErrorReport run_case_row(const SimConfig& sim, int n);

/// Full sweep over sim.n_list; CSV with header
/// N,errE,orderE,errP,orderP,errCurlE,orderCurl[,SerrE,orderSE,SerrP,orderSP].
std::string converge_csv(const SimConfig& sim);

/// Export cell-center grid samples and quiver-style vector files for the
/// final fields (and errors, and optionally the postprocessed fields).
void write_snapshots(const SimConfig& sim, const std::string& out_dir);

/// Built-in oracle and property suite; prints one line per check and returns
/// the number of failures. `corrupt_stiffness` is a negative-control hook
/// that perturbs one stiffness entry so the symmetry check must fail.
int run_checks(std::ostream& out, bool corrupt_stiffness = false);

}  // namespace debyefem

#endif
