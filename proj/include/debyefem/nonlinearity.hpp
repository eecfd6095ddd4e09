/**
 * @file nonlinearity.hpp
 * @brief Scalar nonlinear polarization laws f with f, f' and the strong
 *        monotonicity / Lipschitz / boundedness constants, applied
 *        componentwise to the polarization.
 */

#ifndef DEBYEFEM_NONLINEARITY_HPP
#define DEBYEFEM_NONLINEARITY_HPP

#include <limits>

namespace debyefem {

enum class LawKind { Linear, Cubic, Saturating };

/// f(0) = 0 and f' > 0 on the declared range for all supported laws.
/// The cubic law is not globally bounded; its constants are range-restricted
/// to [-range, range] and callers are expected to watch for range exits.
struct NonlinearLaw {
  LawKind kind = LawKind::Cubic;
  double delta1 = 1.0;
  double delta2 = 1.0;
  /// validity range [-range, range] for the declared constants
  double range = std::numeric_limits<double>::infinity();

  double eval(double x) const;
  double deriv(double x) const;

  /// strong monotonicity constant omega_f on the declared range
  double omega_f() const;
  /// Lipschitz constant C_L on the declared range
  double lipschitz() const;
  /// linear bound M: |f(x)| <= M |x| on the declared range
  double linear_bound() const;
  /// derivative bound B: 0 < f'(x) < B on the declared range
  double deriv_bound() const;

  bool in_range(double x) const { return x >= -range && x <= range; }

  static NonlinearLaw linear(double d1);
  static NonlinearLaw cubic(double d1, double d2, double range = 16.0);
  static NonlinearLaw saturating(double d1, double d2);
};

}  // namespace debyefem

#endif
