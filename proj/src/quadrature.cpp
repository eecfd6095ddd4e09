#include "debyefem/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace debyefem {

namespace {

constexpr int kMaxOrder = 16;

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Newton iteration on Legendre polynomials; standard construction.
Rule1D make_rule(int n) {
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

const Rule1D& cached_rule(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("gauss rule: points per direction must be in [1, 16]");
  static std::vector<Rule1D> cache(kMaxOrder + 1);
  static std::once_flag flags[kMaxOrder + 1];
  std::call_once(flags[n], [n] { cache[n] = make_rule(n); });
  return cache[n];
}

}  // namespace

const std::vector<double>& gauss_nodes_1d(int n) { return cached_rule(n).nodes; }

const std::vector<double>& gauss_weights_1d(int n) {
  return cached_rule(n).weights;
}

QuadRule gauss_rule(int points_per_dir, double x0, double y0, double x1,
                    double y1) {
  const Rule1D& r = cached_rule(points_per_dir);
  const int n = points_per_dir;
  const double hx = 0.5 * (x1 - x0), hy = 0.5 * (y1 - y0);
  const double cx = 0.5 * (x1 + x0), cy = 0.5 * (y1 + y0);

  QuadRule q;
  q.x.reserve(n * n);
  q.y.reserve(n * n);
  q.w.reserve(n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      q.x.push_back(cx + hx * r.nodes[i]);
      q.y.push_back(cy + hy * r.nodes[j]);
      q.w.push_back(hx * hy * r.weights[i] * r.weights[j]);
    }
  return q;
}

}  // namespace debyefem
