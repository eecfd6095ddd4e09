#include "debyefem/nonlinearity.hpp"

#include <stdexcept>

namespace debyefem {

double NonlinearLaw::eval(double x) const {
  switch (kind) {
    case LawKind::Linear:
      return delta1 * x;
    case LawKind::Cubic:
      return delta1 * x + delta2 * x * x * x;
    case LawKind::Saturating:
      return delta1 * x + delta2 * x / (1.0 + x * x);
  }
  return 0.0;
}

double NonlinearLaw::deriv(double x) const {
  switch (kind) {
    case LawKind::Linear:
      return delta1;
    case LawKind::Cubic:
      return delta1 + 3.0 * delta2 * x * x;
    case LawKind::Saturating: {
      double d = 1.0 + x * x;
      return delta1 + delta2 * (1.0 - x * x) / (d * d);
    }
  }
  return 0.0;
}

double NonlinearLaw::omega_f() const {
  switch (kind) {
    case LawKind::Linear:
      return delta1;
    case LawKind::Cubic:
      return delta1;  // min f' attained at x = 0
    case LawKind::Saturating:
      // min over R of (1-x^2)/(1+x^2)^2 is -1/8 (at x^2 = 3)
      return delta1 - delta2 / 8.0;
  }
  return 0.0;
}

double NonlinearLaw::lipschitz() const { return deriv_bound(); }

double NonlinearLaw::linear_bound() const {
  switch (kind) {
    case LawKind::Linear:
      return delta1;
    case LawKind::Cubic:
      return delta1 + delta2 * range * range;
    case LawKind::Saturating:
      return delta1 + delta2;
  }
  return 0.0;
}

double NonlinearLaw::deriv_bound() const {
  switch (kind) {
    case LawKind::Linear:
      return delta1;
    case LawKind::Cubic:
      return delta1 + 3.0 * delta2 * range * range;
    case LawKind::Saturating:
      return delta1 + delta2;  // f'(0)
  }
  return 0.0;
}

NonlinearLaw NonlinearLaw::linear(double d1) {
  if (d1 < 0.0) throw std::invalid_argument("linear law: delta1 must be >= 0");
  NonlinearLaw law;
  law.kind = LawKind::Linear;
  law.delta1 = d1;
  law.delta2 = 0.0;
  return law;
}

NonlinearLaw NonlinearLaw::cubic(double d1, double d2, double range) {
  if (d1 <= 0.0 || d2 < 0.0 || range <= 0.0)
    throw std::invalid_argument("cubic law: require delta1 > 0, delta2 >= 0, range > 0");
  NonlinearLaw law;
  law.kind = LawKind::Cubic;
  law.delta1 = d1;
  law.delta2 = d2;
  law.range = range;
  return law;
}

NonlinearLaw NonlinearLaw::saturating(double d1, double d2) {
  if (d1 <= 0.0 || d2 < 0.0 || d1 - d2 / 8.0 <= 0.0)
    throw std::invalid_argument(
        "saturating law: require delta1 > 0, delta2 >= 0, delta1 > delta2/8");
  NonlinearLaw law;
  law.kind = LawKind::Saturating;
  law.delta1 = d1;
  law.delta2 = d2;
  return law;
}

}  // namespace debyefem
