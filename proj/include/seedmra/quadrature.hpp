#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace seedmra {

// Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration on P_n.
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;

  explicit GaussLegendre(int n) : x(n), w(n) {
    for (int i = 0; i < n; ++i) {
      // Chebyshev-like initial guess.
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p0 = 0, p1 = 0;
      for (int it = 0; it < 100; ++it) {
        p0 = 1.0;
        p1 = 0.0;
        for (int k = 0; k < n; ++k) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
        }
        const double dp = n * (t * p0 - p1) / (t * t - 1.0);
        const double t_new = t - p0 / dp;
        if (std::fabs(t_new - t) < 1e-16) {
          t = t_new;
          break;
        }
        t = t_new;
      }
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
      }
      const double dp = n * (t * p0 - p1) / (t * t - 1.0);
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }

  static const GaussLegendre& order8() {
    static const GaussLegendre rule(8);
    return rule;
  }
  static const GaussLegendre& order16() {
    static const GaussLegendre rule(16);
    return rule;
  }
};

// Composite panel grid over [lo, hi]: panel width chosen so that an integrand
// oscillating at `rate` rad/unit advances at most `max_phase` rad per panel.
struct PanelGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  PanelGrid(double lo, double hi, double rate, double max_phase = 4.0,
            const GaussLegendre& rule = GaussLegendre::order8()) {
    if (hi <= lo) return;
    const double width_cap = max_phase / std::max(rate, 1e-12);
    const double panel = std::min(0.5, width_cap);
    const int n_panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel)));
    const double h = (hi - lo) / n_panels;
    nodes.reserve(n_panels * rule.x.size());
    weights.reserve(n_panels * rule.x.size());
    for (int p = 0; p < n_panels; ++p) {
      const double c = lo + (p + 0.5) * h;
      for (std::size_t k = 0; k < rule.x.size(); ++k) {
        nodes.push_back(c + 0.5 * h * rule.x[k]);
        weights.push_back(0.5 * h * rule.w[k]);
      }
    }
  }
};

}  // namespace seedmra
