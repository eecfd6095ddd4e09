#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "debyefem/manufactured.hpp"

using namespace debyefem;

namespace {

// sample interior points away from the |2s-1|^alpha kink lines, where the
// centered differences used as the oracle are themselves accurate
double sample_coord(std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  double v;
  do {
    v = unif(rng);
  } while (std::abs(v - 0.5) < 0.05);
  return v;
}

struct Pt {
  double x, y;
};

std::vector<Pt> sample_points(const ExactCase& c, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Pt> pts;
  while (static_cast<int>(pts.size()) < count) {
    const double x = sample_coord(rng), y = sample_coord(rng);
    if (c.domain_kind == DomainKind::LShape && x > 0.5 && y < 0.5) continue;
    pts.push_back({x, y});
  }
  return pts;
}

double rel(double got, double expected) {
  return std::abs(got - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace

TEST_CASE("example 1 point values") {
  const ExactCase c = example1();
  const auto e = c.E(0.5, 0.5, 0.0);
  CHECK(e[0] == 0.0);  // |2x-1|^alpha factor vanishes
  CHECK(e[1] == 0.0);
  for (double x : {0.0, 0.25, 0.7, 1.0}) {
    CHECK(c.E(x, 0.0, 0.3)[0] == doctest::Approx(0.0));
    CHECK(c.E(x, 1.0, 0.3)[0] == doctest::Approx(0.0));
  }
}

TEST_CASE("boundary tangential trace vanishes") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const ExactCase& c : {example1(), example2()}) {
    for (int i = 0; i < 100; ++i) {
      const double s = unif(rng);
      const double t = unif(rng);
      if (c.domain_kind == DomainKind::UnitSquare) {
        CHECK(std::abs(c.E(s, 0.0, t)[0]) <= 1e-12);  // bottom: tangent x
        CHECK(std::abs(c.E(s, 1.0, t)[0]) <= 1e-12);
        CHECK(std::abs(c.E(0.0, s, t)[1]) <= 1e-12);  // left: tangent y
        CHECK(std::abs(c.E(1.0, s, t)[1]) <= 1e-12);
      } else {
        CHECK(std::abs(c.E(s, 0.0, t)[0]) <= 1e-12);
        CHECK(std::abs(c.E(s, 1.0, t)[0]) <= 1e-12);
        CHECK(std::abs(c.E(0.0, s, t)[1]) <= 1e-12);
        // re-entrant boundary pieces
        const double s_half = 0.5 + 0.5 * s;
        CHECK(std::abs(c.E(s_half, 0.5, t)[0]) <= 1e-12);
        CHECK(std::abs(c.E(0.5, 0.5 * s, t)[1]) <= 1e-12);
        CHECK(std::abs(c.E(1.0, 0.5 + 0.5 * s, t)[1]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("time derivatives against finite differences") {
  const double t = 1e-3, eps = 1e-6;
  for (const ExactCase& c : {example1(), example2()}) {
    for (const Pt& p : sample_points(c, 100, 51)) {
      for (int k = 0; k < 2; ++k) {
        const double fd1 =
            (c.E(p.x, p.y, t + eps)[k] - c.E(p.x, p.y, t - eps)[k]) / (2 * eps);
        CHECK(rel(c.dt_E(p.x, p.y, t)[k], fd1) <= 1e-6);
        // wider step for the second difference to keep roundoff in check
        const double eps2 = 1e-4;
        const double fd2 = (c.E(p.x, p.y, t + eps2)[k] -
                            2 * c.E(p.x, p.y, t)[k] +
                            c.E(p.x, p.y, t - eps2)[k]) /
                           (eps2 * eps2);
        CHECK(rel(c.dtt_E(p.x, p.y, t)[k], fd2) <= 1e-6);
        const double fdp =
            (c.P(p.x, p.y, t + eps)[k] - c.P(p.x, p.y, t - eps)[k]) / (2 * eps);
        CHECK(rel(c.dt_P(p.x, p.y, t)[k], fdp) <= 1e-6);
      }
    }
  }
}

TEST_CASE("spatial derivatives against finite differences") {
  const double t = 1e-3, eps = 1e-6;
  for (const ExactCase& c : {example1(), example2()}) {
    for (const Pt& p : sample_points(c, 100, 77)) {
      // curl E = dx E2 - dy E1
      const double fd_curl = (c.E(p.x + eps, p.y, t)[1] -
                              c.E(p.x - eps, p.y, t)[1]) /
                                 (2 * eps) -
                             (c.E(p.x, p.y + eps, t)[0] -
                              c.E(p.x, p.y - eps, t)[0]) /
                                 (2 * eps);
      CHECK(rel(c.curl_E(p.x, p.y, t), fd_curl) <= 1e-6);
      // curl curl E = (dy curl, -dx curl)
      const double fd_cc1 =
          (c.curl_E(p.x, p.y + eps, t) - c.curl_E(p.x, p.y - eps, t)) /
          (2 * eps);
      const double fd_cc2 =
          -(c.curl_E(p.x + eps, p.y, t) - c.curl_E(p.x - eps, p.y, t)) /
          (2 * eps);
      CHECK(rel(c.curl_curl_E(p.x, p.y, t)[0], fd_cc1) <= 1e-6);
      CHECK(rel(c.curl_curl_E(p.x, p.y, t)[1], fd_cc2) <= 1e-6);
    }
  }
}

TEST_CASE("sources close the continuous equations") {
  const PhysParams params;
  const NonlinearLaw law = NonlinearLaw::cubic(1.0, 1.0);
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> tdist(0.0, 0.1);
  for (const ExactCase& c : {example1(), example2()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const double t = tdist(rng);
      const Pt p = sample_points(c, 1, 1000 + trial)[0];
      const VecFn g_e = source_E(c, params, law, t);
      const VecFn g_p = source_P(c, params, law, t);
      const auto e = c.E(p.x, p.y, t);
      const auto pe = c.P(p.x, p.y, t);
      const auto dtte = c.dtt_E(p.x, p.y, t);
      const auto dte = c.dt_E(p.x, p.y, t);
      const auto cce = c.curl_curl_E(p.x, p.y, t);
      const auto dtp = c.dt_P(p.x, p.y, t);
      const auto ge = g_e(p.x, p.y);
      const auto gp = g_p(p.x, p.y);
      for (int k = 0; k < 2; ++k) {
        const double lhs_e =
            params.mu0 * params.eps0 * dtte[k] + params.a1() * dte[k] +
            cce[k] - params.a2() * law.deriv(pe[k]) * e[k] +
            (params.mu0 / (params.tau * params.tau)) * law.deriv(pe[k]) *
                law.eval(pe[k]);
        CHECK(std::abs(lhs_e + params.mu0 * ge[k]) <= 1e-9);
        const double lhs_p = params.tau * dtp[k] + law.eval(pe[k]);
        const double rhs_p =
            params.eps0 * (params.eps_s - params.eps_inf) * e[k] + gp[k];
        CHECK(std::abs(lhs_p - rhs_p) <= 1e-9);
      }
    }
  }
}

TEST_CASE("source cancellations under the reference parameters") {
  const PhysParams params;
  const ExactCase c = example1();
  std::mt19937 rng(3);
  for (const Pt& p : sample_points(c, 50, 8)) {
    const double t = 0.07;
    // f = 0: the polarization source vanishes identically
    const auto gp0 = source_P(c, params, NonlinearLaw::linear(0.0), t)(p.x, p.y);
    CHECK(std::abs(gp0[0]) <= 1e-13);
    CHECK(std::abs(gp0[1]) <= 1e-13);
    // cubic: what is left is exactly f(P)
    const NonlinearLaw cubic = NonlinearLaw::cubic(1.0, 1.0);
    const auto gp = source_P(c, params, cubic, t)(p.x, p.y);
    const auto pv = c.P(p.x, p.y, t);
    CHECK(gp[0] == doctest::Approx(cubic.eval(pv[0])).epsilon(1e-12));
    CHECK(gp[1] == doctest::Approx(cubic.eval(pv[1])).epsilon(1e-12));
  }
  (void)rng;
}

TEST_CASE("zero case") {
  const ExactCase c = zero_case();
  const PhysParams params;
  const NonlinearLaw law = NonlinearLaw::cubic(1.0, 1.0);
  const auto ge = source_E(c, params, law, 0.5)(0.3, 0.4);
  const auto gp = source_P(c, params, law, 0.5)(0.3, 0.4);
  CHECK(ge[0] == 0.0);
  CHECK(ge[1] == 0.0);
  CHECK(gp[0] == 0.0);
  CHECK(gp[1] == 0.0);
  CHECK(c.E(0.1, 0.9, 2.0)[0] == 0.0);
}

TEST_CASE("case lookup") {
  CHECK(case_by_name("example1").domain_kind == DomainKind::UnitSquare);
  CHECK(case_by_name("example2").domain_kind == DomainKind::LShape);
  CHECK(case_by_name("zero").name == "zero");
  CHECK_THROWS_AS(case_by_name("nope"), std::invalid_argument);
}
