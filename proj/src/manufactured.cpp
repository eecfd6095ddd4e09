#include "debyefem/manufactured.hpp"

#include <cmath>
#include <stdexcept>

namespace debyefem {

namespace {

// |2s - 1|^alpha and its first derivative (a.e.; the derivative vanishes at
// s = 1/2 for alpha > 1, which is a mesh line for even N anyway).
double kink(double s, double alpha) { return std::pow(std::abs(2.0 * s - 1.0), alpha); }

double kink_d(double s, double alpha) {
  const double t = 2.0 * s - 1.0;
  if (t == 0.0) return 0.0;
  const double sgn = t > 0.0 ? 1.0 : -1.0;
  return 2.0 * alpha * sgn * std::pow(std::abs(t), alpha - 1.0);
}

}  // namespace

ExactCase example1() {
  ExactCase c;
  c.name = "example1";
  c.domain_kind = DomainKind::UnitSquare;
  c.alpha = 2.1;
  const double alpha = c.alpha;

  auto field = [alpha](double x, double y, double t) -> std::array<double, 2> {
    const double et = std::exp(t);
    return {et * std::sin((1.0 + x) * y) * (y - 1.0) * kink(x, alpha),
            et * std::sin((1.0 + y) * x) * (x - 1.0) * kink(y, alpha)};
  };
  c.E = field;
  c.dt_E = field;   // time factor exp(t)
  c.dtt_E = field;
  c.P = field;
  c.dt_P = field;

  c.curl_E = [alpha](double x, double y, double t) {
    const double et = std::exp(t);
    const double A = (1.0 + y) * std::cos((1.0 + y) * x) * (x - 1.0) +
                     std::sin((1.0 + y) * x);
    const double B = (1.0 + x) * std::cos((1.0 + x) * y) * (y - 1.0) +
                     std::sin((1.0 + x) * y);
    return et * (kink(y, alpha) * A - kink(x, alpha) * B);
  };

  c.curl_curl_E = [alpha](double x, double y,
                          double t) -> std::array<double, 2> {
    const double et = std::exp(t);
    const double u = kink(x, alpha), up = kink_d(x, alpha);
    const double v = kink(y, alpha), vp = kink_d(y, alpha);
    const double sx = std::sin((1.0 + y) * x), cx = std::cos((1.0 + y) * x);
    const double sy = std::sin((1.0 + x) * y), cy = std::cos((1.0 + x) * y);

    const double A = (1.0 + y) * cx * (x - 1.0) + sx;
    const double dyA = cx * (x - 1.0) - x * (1.0 + y) * (x - 1.0) * sx + x * cx;
    const double B = (1.0 + x) * cy * (y - 1.0) + sy;
    const double dxB = cy * (y - 1.0) - y * (1.0 + x) * (y - 1.0) * sy + y * cy;

    const double dyx_E2 = et * (vp * A + v * dyA);
    const double dyy_E1 =
        et * u *
        (-(1.0 + x) * (1.0 + x) * sy * (y - 1.0) + 2.0 * (1.0 + x) * cy);
    const double dxx_E2 =
        et * v *
        (-(1.0 + y) * (1.0 + y) * sx * (x - 1.0) + 2.0 * (1.0 + y) * cx);
    const double dxy_E1 = et * (up * B + u * dxB);

    // curl curl E = (d/dy curlE, -d/dx curlE)
    return {dyx_E2 - dyy_E1, dxy_E1 - dxx_E2};
  };

  return c;
}

ExactCase example2() {
  ExactCase c;
  c.name = "example2";
  c.domain_kind = DomainKind::LShape;
  c.alpha = 2.1;
  const double alpha = c.alpha;

  auto q = [](double s) { return s * (s - 0.5) * (s - 1.0); };
  auto qp = [](double s) { return 3.0 * s * s - 3.0 * s + 0.5; };
  auto qpp = [](double s) { return 6.0 * s - 3.0; };

  auto field = [alpha, q](double x, double y,
                          double t) -> std::array<double, 2> {
    const double et = std::exp(t);
    return {et * std::sin(x * y) * q(y) * kink(x, alpha),
            et * std::sin(x * y) * q(x) * kink(y, alpha)};
  };
  c.E = field;
  c.dt_E = field;
  c.dtt_E = field;
  c.P = field;
  c.dt_P = field;

  c.curl_E = [alpha, q, qp](double x, double y, double t) {
    const double et = std::exp(t);
    const double s = std::sin(x * y), co = std::cos(x * y);
    const double dx_E2 = kink(y, alpha) * (y * co * q(x) + s * qp(x));
    const double dy_E1 = kink(x, alpha) * (x * co * q(y) + s * qp(y));
    return et * (dx_E2 - dy_E1);
  };

  c.curl_curl_E = [alpha, q, qp, qpp](double x, double y,
                                      double t) -> std::array<double, 2> {
    const double et = std::exp(t);
    const double u = kink(x, alpha), up = kink_d(x, alpha);
    const double v = kink(y, alpha), vp = kink_d(y, alpha);
    const double s = std::sin(x * y), co = std::cos(x * y);

    const double dyy_E1 =
        et * u * (-x * x * s * q(y) + 2.0 * x * co * qp(y) + s * qpp(y));
    const double dxx_E2 =
        et * v * (-y * y * s * q(x) + 2.0 * y * co * qp(x) + s * qpp(x));
    const double dxy_E1 =
        et * (up * (x * co * q(y) + s * qp(y)) +
              u * ((co - x * y * s) * q(y) + y * co * qp(y)));
    const double dyx_E2 =
        et * (vp * (y * co * q(x) + s * qp(x)) +
              v * ((co - x * y * s) * q(x) + x * co * qp(x)));

    return {dyx_E2 - dyy_E1, dxy_E1 - dxx_E2};
  };

  return c;
}

ExactCase zero_case() {
  ExactCase c;
  c.name = "zero";
  c.domain_kind = DomainKind::UnitSquare;
  auto zv = [](double, double, double) -> std::array<double, 2> {
    return {0.0, 0.0};
  };
  c.E = zv;
  c.dt_E = zv;
  c.dtt_E = zv;
  c.P = zv;
  c.dt_P = zv;
  c.curl_E = [](double, double, double) { return 0.0; };
  c.curl_curl_E = zv;
  return c;
}

ExactCase case_by_name(const std::string& name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  if (name == "zero") return zero_case();
  throw std::invalid_argument("unknown case: " + name);
}

VecFn source_E(const ExactCase& c, const PhysParams& params,
               const NonlinearLaw& law, double t) {
  const double em = params.eps0 * params.mu0;
  const double a1 = params.a1();
  const double a2 = params.a2();
  const double mu0 = params.mu0;
  const double tau2 = params.tau * params.tau;
  return [c, law, em, a1, a2, mu0, tau2,
          t](double x, double y) -> std::array<double, 2> {
    const auto dtt = c.dtt_E(x, y, t);
    const auto dt = c.dt_E(x, y, t);
    const auto cc = c.curl_curl_E(x, y, t);
    const auto e = c.E(x, y, t);
    const auto p = c.P(x, y, t);
    std::array<double, 2> g;
    for (int k = 0; k < 2; ++k) {
      const double fp = law.deriv(p[k]);
      const double lhs = em * dtt[k] + a1 * dt[k] + cc[k] - a2 * fp * e[k] +
                         (mu0 / tau2) * fp * law.eval(p[k]);
      g[k] = -lhs / mu0;
    }
    return g;
  };
}

VecFn source_P(const ExactCase& c, const PhysParams& params,
               const NonlinearLaw& law, double t) {
  const double tau = params.tau;
  const double coupling = params.eps0 * (params.eps_s - params.eps_inf);
  return [c, law, tau, coupling, t](double x,
                                     double y) -> std::array<double, 2> {
    const auto dtp = c.dt_P(x, y, t);
    const auto p = c.P(x, y, t);
    const auto e = c.E(x, y, t);
    return {tau * dtp[0] + law.eval(p[0]) - coupling * e[0],
            tau * dtp[1] + law.eval(p[1]) - coupling * e[1]};
  };
}

}  // namespace debyefem
