/**
 * @file manufactured.hpp
 * @brief Closed-form exact fields, their derivatives, and the residual
 *        sources that make them solve the forced Maxwell-Debye system.
 */

#ifndef DEBYEFEM_MANUFACTURED_HPP
#define DEBYEFEM_MANUFACTURED_HPP

#include <array>
#include <functional>
#include <string>

#include "debyefem/mesh.hpp"
#include "debyefem/nonlinearity.hpp"
#include "debyefem/spaces.hpp"

namespace debyefem {

using SpaceTimeVecFn =
    std::function<std::array<double, 2>(double, double, double)>;
using SpaceTimeScalarFn = std::function<double(double, double, double)>;

struct ExactCase {
  std::string name;
  DomainKind domain_kind = DomainKind::UnitSquare;
  double alpha = 2.1;

  SpaceTimeVecFn E;
  SpaceTimeVecFn dt_E;
  SpaceTimeVecFn dtt_E;
  SpaceTimeScalarFn curl_E;
  SpaceTimeVecFn curl_curl_E;
  SpaceTimeVecFn P;
  SpaceTimeVecFn dt_P;
};

ExactCase example1();
ExactCase example2();
ExactCase zero_case();

ExactCase case_by_name(const std::string& name);

/// Residual source for the E-equation: the exact fields satisfy the
/// second-order E-equation with right-hand side -mu0 * g_E.
VecFn source_E(const ExactCase& c, const PhysParams& params,
               const NonlinearLaw& law, double t);

/// Residual source for the P-equation: tau dP/dt + f(P) - eps0(es-einf) E.
VecFn source_P(const ExactCase& c, const PhysParams& params,
               const NonlinearLaw& law, double t);

}  // namespace debyefem

#endif
