#include "seedmra/qmcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>

#include "seedmra/errors.hpp"
#include "seedmra/quadrature.hpp"

namespace seedmra {

namespace {

const double kInvRoot2Pi = 1.0 / std::sqrt(kTwoPi);

// Fraction of the peak magnitude tolerated at a truncated integration edge
// or at the quadrature window's boundary ring.
const double kTailFraction = 1e-5;

struct Axis {
  std::vector<double> x;
  std::vector<double> w;
  double dx = 0.0;
};

Axis trapezoid_axis(double radius, int nodes) {
  Axis ax;
  ax.dx = 2.0 * radius / (nodes - 1);
  ax.x.resize(static_cast<std::size_t>(nodes));
  ax.w.assign(static_cast<std::size_t>(nodes), ax.dx);
  for (int i = 0; i < nodes; ++i) ax.x[static_cast<std::size_t>(i)] = -radius + ax.dx * i;
  ax.w.front() *= 0.5;
  ax.w.back() *= 0.5;
  return ax;
}

struct Window {
  double lo = 0.0, hi = 0.0;
  bool capped_lo = false, capped_hi = false;
  bool empty = false;
};

Window clip_window(double lo, double hi, double cap_lo, double cap_hi) {
  Window w;
  w.lo = lo;
  w.hi = hi;
  if (w.lo < cap_lo) {
    w.lo = cap_lo;
    w.capped_lo = true;
  }
  if (w.hi > cap_hi) {
    w.hi = cap_hi;
    w.capped_hi = true;
  }
  w.empty = !(w.lo < w.hi);
  return w;
}

// Int f(u) e^{i phase(u)} du.  The magnitude check at radius-truncated edges
// guards against handing a slowly decaying integrand to a finite window.
template <class F, class P>
complexd osc_integral(const F& f, const P& phase, const Window& win, double rate) {
  if (win.empty) return {0.0, 0.0};
  const PanelGrid grid(win.lo, win.hi, rate, 8.0, GaussLegendre::order16());
  complexd acc{0.0, 0.0};
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double u = grid.nodes[i];
    const complexd v = f(u);
    peak = std::max(peak, std::abs(v));
    acc += grid.weights[i] * v * std::polar(1.0, phase(u));
  }
  if (win.capped_lo && std::abs(f(win.lo)) > kTailFraction * peak)
    throw QuadratureDivergence("integrand has not decayed at the lower integration edge");
  if (win.capped_hi && std::abs(f(win.hi)) > kTailFraction * peak)
    throw QuadratureDivergence("integrand has not decayed at the upper integration edge");
  return acc;
}

// A(x) = (1/sqrt(2pi)) Int phi0(s) e^{i(s^2/2 - x s)} ds
complexd ex3_a(const SeedFunction& phi0, double x) {
  double lo = 0.0, hi = 0.0;
  phi0.support_hint(lo, hi);
  const Window win = clip_window(lo, hi, -24.0, 24.0);
  const double smax = std::max(std::fabs(win.lo), std::fabs(win.hi));
  const double rate = smax + std::fabs(x) + 2.0;
  return kInvRoot2Pi * osc_integral([&](double s) { return phi0.eval(s); },
                                    [&](double s) { return 0.5 * s * s - x * s; }, win, rate);
}

// B(y) = (1/sqrt(2pi)) Int h(t) e^{i(y t - t^2/2)} dt
complexd ex3_b(const SeedFunction& seed, double y) {
  double lo = 0.0, hi = 0.0;
  seed.support_hint(lo, hi);
  const Window win = clip_window(lo, hi, -24.0, 24.0);
  const double tmax = std::max(std::fabs(win.lo), std::fabs(win.hi));
  const double rate = tmax + std::fabs(y) + 2.0;
  return kInvRoot2Pi * osc_integral([&](double t) { return seed.eval(t); },
                                    [&](double t) { return y * t - 0.5 * t * t; }, win, rate);
}

// Psi_1(x, y) = (1/sqrt(2pi)) e^{-i x y / 2} Int h(t) phi0hat(t - y) e^{i x t} dt
complexd ex1_value(const SeedFunction& seed, const SeedFunction& phi0hat, double x, double y) {
  double lo = 0.0, hi = 0.0;
  seed.support_hint(lo, hi);
  const Window win = clip_window(lo, hi, y - 16.0, y + 16.0);
  const double rate = std::fabs(x) + 18.0;
  const complexd integral =
      osc_integral([&](double t) { return seed.eval(t) * phi0hat.eval(t - y); },
                   [&](double t) { return x * t; }, win, rate);
  return kInvRoot2Pi * std::polar(1.0, -0.5 * x * y) * integral;
}

void require_position(const SeedFunction& seed) {
  if (seed.domain != Domain::Position)
    throw std::invalid_argument("wavefunction needs position-domain seed data");
}

void ring_check(const std::vector<complexd>& table, int n1, int n2) {
  double peak = 0.0, ring = 0.0;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const double v = std::abs(table[static_cast<std::size_t>(i) * n2 + j]);
      peak = std::max(peak, v);
      if (i == 0 || j == 0 || i == n1 - 1 || j == n2 - 1) ring = std::max(ring, v);
    }
  }
  if (ring > kTailFraction * peak)
    throw QuadratureDivergence(
        "wavefunction has not decayed at the quadrature boundary; enlarge the window or use a "
        "smoother seed");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Example2: Psi(x, y) = phi0hat(-x) hhat(x - y).  Both factors are closed
// forms, and x - y - a l1 lives on the difference grid, so the whole table
// reduces to two 1D tables.
std::vector<complexd> ex2_values(const KernelModel& model, const SeedFunction& seed,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 const QuadSpec& quad) {
  const double aa = kCellWidth;
  const int N = quad.nodes;
  const Axis ax = trapezoid_axis(quad.radius, N);
  const SeedFunction phat = model.phi0.fourier();
  const SeedFunction hhat = seed.fourier();

  std::vector<complexd> u(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) u[static_cast<std::size_t>(i)] = phat.eval(-ax.x[static_cast<std::size_t>(i)]);

  std::vector<int> l1s;
  for (const auto& p : pairs) l1s.push_back(p.first);
  l1s.push_back(0);
  l1s = sorted_unique(std::move(l1s));

  const int nd = 2 * N - 1;
  std::vector<std::vector<complexd>> wtab;
  std::vector<int> l1_index(l1s.size());
  for (std::size_t q = 0; q < l1s.size(); ++q) {
    std::vector<complexd> w(static_cast<std::size_t>(nd));
    for (int d = 0; d < nd; ++d)
      w[static_cast<std::size_t>(d)] = hhat.eval((d - (N - 1)) * ax.dx - aa * l1s[q]);
    wtab.push_back(std::move(w));
  }
  const std::vector<complexd>& w0 =
      wtab[static_cast<std::size_t>(std::lower_bound(l1s.begin(), l1s.end(), 0) - l1s.begin())];

  {
    std::vector<complexd> base(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        base[static_cast<std::size_t>(i) * N + j] =
            u[static_cast<std::size_t>(i)] * w0[static_cast<std::size_t>(i - j + N - 1)];
    ring_check(base, N, N);
  }

  std::vector<complexd> out(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int l1 = pairs[p].first, l2 = pairs[p].second;
    const std::vector<complexd>& wl =
        wtab[static_cast<std::size_t>(std::lower_bound(l1s.begin(), l1s.end(), l1) - l1s.begin())];
    // q[d] = wl[d] conj(w0[d]) e^{i a l2 dx d}; the translation phase
    // e^{i a l2 (x-y)} depends only on the difference index.
    std::vector<complexd> qd(static_cast<std::size_t>(nd));
    for (int d = 0; d < nd; ++d)
      qd[static_cast<std::size_t>(d)] = wl[static_cast<std::size_t>(d)] *
                                        std::conj(w0[static_cast<std::size_t>(d)]) *
                                        std::polar(1.0, aa * l2 * (d - (N - 1)) * ax.dx);
    complexd acc{0.0, 0.0};
    for (int i = 0; i < N; ++i) {
      const double wu = ax.w[static_cast<std::size_t>(i)] * std::norm(u[static_cast<std::size_t>(i)]);
      complexd row{0.0, 0.0};
      for (int j = 0; j < N; ++j)
        row += ax.w[static_cast<std::size_t>(j)] * qd[static_cast<std::size_t>(i - j + N - 1)];
      acc += wu * row;
    }
    out[p] = acc;
  }
  return out;
}

// Example3: Psi(x, y) = e^{i x^2/2} A(x) B(y); translations shift only y, so
// the x-sum factors out completely.
std::vector<complexd> ex3_values(const KernelModel& model, const SeedFunction& seed,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 const QuadSpec& quad) {
  const double aa = kCellWidth;
  const int N = quad.nodes;
  const Axis ax = trapezoid_axis(quad.radius, N);

  std::vector<complexd> A(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) A[static_cast<std::size_t>(i)] = ex3_a(model.phi0, ax.x[static_cast<std::size_t>(i)]);

  std::vector<int> ms;
  for (const auto& p : pairs) ms.push_back(p.first + p.second);
  ms.push_back(0);
  ms = sorted_unique(std::move(ms));
  std::vector<std::vector<complexd>> B(ms.size());
  for (std::size_t q = 0; q < ms.size(); ++q) {
    B[q].resize(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j)
      B[q][static_cast<std::size_t>(j)] = ex3_b(seed, ax.x[static_cast<std::size_t>(j)] + aa * ms[q]);
  }
  const std::vector<complexd>& B0 =
      B[static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), 0) - ms.begin())];

  {
    std::vector<complexd> base(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        base[static_cast<std::size_t>(i) * N + j] =
            A[static_cast<std::size_t>(i)] * B0[static_cast<std::size_t>(j)];
    ring_check(base, N, N);
  }

  double sx = 0.0;
  for (int i = 0; i < N; ++i)
    sx += ax.w[static_cast<std::size_t>(i)] * std::norm(A[static_cast<std::size_t>(i)]);

  std::vector<complexd> out(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int l2 = pairs[p].second, m = pairs[p].first + pairs[p].second;
    const std::vector<complexd>& Bm =
        B[static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), m) - ms.begin())];
    complexd acc{0.0, 0.0};
    for (int j = 0; j < N; ++j)
      acc += ax.w[static_cast<std::size_t>(j)] *
             std::polar(1.0, -aa * l2 * ax.x[static_cast<std::size_t>(j)]) *
             Bm[static_cast<std::size_t>(j)] * std::conj(B0[static_cast<std::size_t>(j)]);
    out[p] = sx * acc;
  }
  return out;
}

// Example1 has a genuine 1D quadrature per point; rows share their t-rule and
// the e^{i x t} factor advances by a constant rotation along the x axis.
std::vector<complexd> ex1_values(const KernelModel& model, const SeedFunction& seed,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 const QuadSpec& quad) {
  const double aa = kCellWidth;
  const int N = quad.nodes;
  const double R = quad.radius;
  const Axis ax = trapezoid_axis(R, N);
  const SeedFunction phat = model.phi0.fourier();

  int l_abs = 0;
  for (const auto& p : pairs)
    l_abs = std::max({l_abs, std::abs(p.first), std::abs(p.second)});

  double lo = 0.0, hi = 0.0;
  seed.support_hint(lo, hi);
  const double cap = R + aa * l_abs + 12.0;
  const Window win = clip_window(lo, hi, -cap, cap);
  std::vector<complexd> out(pairs.size(), complexd{0.0, 0.0});
  if (win.empty) return out;
  const double rate = R + aa * l_abs + 10.0;
  const PanelGrid trule(win.lo, win.hi, rate, 8.0, GaussLegendre::order16());
  const std::size_t nt = trule.nodes.size();

  std::vector<complexd> ht(nt);
  for (std::size_t k = 0; k < nt; ++k) ht[k] = seed.eval(trule.nodes[k]);

  // Weighted integrand samples for the row at ordinate y, plus the edge
  // decay check when the window was truncated by the radius cap.
  std::vector<complexd> bk(nt);
  auto build_row = [&](double y) {
    double peak = 0.0;
    for (std::size_t k = 0; k < nt; ++k) {
      const complexd v = ht[k] * phat.eval(trule.nodes[k] - y);
      peak = std::max(peak, std::abs(v));
      bk[k] = trule.weights[k] * v;
    }
    if (win.capped_lo && std::abs(seed.eval(win.lo) * phat.eval(win.lo - y)) > kTailFraction * peak)
      throw QuadratureDivergence("integrand has not decayed at the lower integration edge");
    if (win.capped_hi && std::abs(seed.eval(win.hi) * phat.eval(win.hi - y)) > kTailFraction * peak)
      throw QuadratureDivergence("integrand has not decayed at the upper integration edge");
  };

  // G[i] = Sum_k bk[k] e^{i (x_i + shift) t_k} by phase recurrence in i.
  std::vector<complexd> G(static_cast<std::size_t>(N));
  auto scan_rows = [&](double shift) {
    std::fill(G.begin(), G.end(), complexd{0.0, 0.0});
    for (std::size_t k = 0; k < nt; ++k) {
      const double t = trule.nodes[k];
      complexd ph = std::polar(1.0, (ax.x[0] + shift) * t);
      const complexd rot = std::polar(1.0, ax.dx * t);
      const complexd b = bk[k];
      for (int i = 0; i < N; ++i) {
        G[static_cast<std::size_t>(i)] += b * ph;
        ph *= rot;
      }
    }
  };

  // Base table Psi(x_i, y_j), stored j-major.
  std::vector<complexd> base(static_cast<std::size_t>(N) * N);
  for (int j = 0; j < N; ++j) {
    const double y = ax.x[static_cast<std::size_t>(j)];
    build_row(y);
    scan_rows(0.0);
    for (int i = 0; i < N; ++i)
      base[static_cast<std::size_t>(j) * N + i] =
          kInvRoot2Pi * std::polar(1.0, -0.5 * ax.x[static_cast<std::size_t>(i)] * y) *
          G[static_cast<std::size_t>(i)];
  }
  {
    std::vector<complexd> t(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        t[static_cast<std::size_t>(i) * N + j] = base[static_cast<std::size_t>(j) * N + i];
    ring_check(t, N, N);
  }

  // Group the requested pairs by l2 so each shifted row is built once.
  std::vector<int> l2s;
  for (const auto& p : pairs) l2s.push_back(p.second);
  l2s = sorted_unique(std::move(l2s));

  for (int l2 : l2s) {
    std::vector<int> l1s;
    for (const auto& p : pairs)
      if (p.second == l2) l1s.push_back(p.first);
    l1s = sorted_unique(std::move(l1s));

    for (int j = 0; j < N; ++j) {
      const double y = ax.x[static_cast<std::size_t>(j)];
      const double yp = y + aa * l2;
      build_row(yp);
      for (int l1 : l1s) {
        scan_rows(aa * l1);
        complexd acc{0.0, 0.0};
        for (int i = 0; i < N; ++i) {
          const double x = ax.x[static_cast<std::size_t>(i)];
          // Translation phase plus the e^{-i x' y' / 2} prefactor of the
          // shifted evaluation point.
          const double theta =
              0.5 * aa * (l1 * y - l2 * x) - 0.5 * (x + aa * l1) * yp;
          acc += ax.w[static_cast<std::size_t>(i)] * std::polar(1.0, theta) *
                 G[static_cast<std::size_t>(i)] *
                 std::conj(base[static_cast<std::size_t>(j) * N + i]);
        }
        acc *= kInvRoot2Pi * ax.w[static_cast<std::size_t>(j)];
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if (pairs[p].first == l1 && pairs[p].second == l2) out[p] += acc;
      }
    }
  }
  return out;
}

std::vector<complexd> overlap_values(const KernelModel& model, const SeedFunction& seed,
                                     const std::vector<std::pair<int, int>>& pairs,
                                     const QuadSpec& quad) {
  model.validate();
  quad.validate();
  require_position(seed);
  switch (model.variant) {
    case KernelVariant::Example1:
      return ex1_values(model, seed, pairs, quad);
    case KernelVariant::Example2:
      return ex2_values(model, seed, pairs, quad);
    case KernelVariant::Example3:
      return ex3_values(model, seed, pairs, quad);
  }
  throw std::logic_error("unknown kernel variant");
}

}  // namespace

void KernelModel::validate() const {
  const double n2 = phi0.l2_norm_sq();
  if (std::fabs(n2 - 1.0) > 1e-10)
    throw std::invalid_argument("phi0 must be normalized: | ||phi0||^2 - 1 | <= 1e-10");
}

void QuadSpec::validate() const {
  if (!(radius > 0.0)) throw std::invalid_argument("quadrature radius must be positive");
  if (nodes < 2) throw std::invalid_argument("quadrature needs at least 2 nodes per axis");
}

complexd kernel(const KernelModel& model, double x, double y, double s, double t) {
  double theta = 0.0;
  switch (model.variant) {
    case KernelVariant::Example1:
      theta = x * t + y * s - s * t - 0.5 * x * y;
      break;
    case KernelVariant::Example2:
      theta = x * (s - t) + y * t;
      break;
    case KernelVariant::Example3:
      theta = 0.5 * (x * x + 2.0 * (y * t - x * s) + s * s - t * t);
      break;
  }
  return std::polar(1.0 / kTwoPi, theta);
}

complexd wavefunction(const KernelModel& model, const SeedFunction& seed, double x, double y,
                      const QuadSpec& quad) {
  model.validate();
  quad.validate();
  require_position(seed);
  switch (model.variant) {
    case KernelVariant::Example1:
      return ex1_value(seed, model.phi0.fourier(), x, y);
    case KernelVariant::Example2: {
      const SeedFunction phat = model.phi0.fourier();
      const SeedFunction hhat = seed.fourier();
      return phat.eval(-x) * hhat.eval(x - y);
    }
    case KernelVariant::Example3:
      return std::polar(1.0, 0.5 * x * x) * ex3_a(model.phi0, x) * ex3_b(seed, y);
  }
  throw std::logic_error("unknown kernel variant");
}

complexd wavefunction_direct(const KernelModel& model, const SeedFunction& seed, double x,
                             double y, const QuadSpec& quad) {
  model.validate();
  quad.validate();
  require_position(seed);

  double slo = 0.0, shi = 0.0;
  model.phi0.support_hint(slo, shi);
  const Window swin = clip_window(slo, shi, -24.0, 24.0);
  double tlo = 0.0, thi = 0.0;
  seed.support_hint(tlo, thi);
  const Window twin = clip_window(tlo, thi, -24.0, 24.0);
  if (swin.empty || twin.empty) return {0.0, 0.0};

  const double smax = std::max(std::fabs(swin.lo), std::fabs(swin.hi));
  const double tmax = std::max(std::fabs(twin.lo), std::fabs(twin.hi));
  const double rate = std::fabs(x) + std::fabs(y) + smax + tmax + 2.0;
  const PanelGrid srule(swin.lo, swin.hi, rate, 8.0, GaussLegendre::order16());
  const PanelGrid trule(twin.lo, twin.hi, rate, 8.0, GaussLegendre::order16());

  complexd acc{0.0, 0.0};
  for (std::size_t i = 0; i < srule.nodes.size(); ++i) {
    const double s = srule.nodes[i];
    const complexd fs = srule.weights[i] * model.phi0.eval(s);
    complexd inner{0.0, 0.0};
    for (std::size_t k = 0; k < trule.nodes.size(); ++k) {
      const double t = trule.nodes[k];
      inner += trule.weights[k] * seed.eval(t) * kernel(model, x, y, s, t);
    }
    acc += fs * inner;
  }
  return acc;
}

WaveEvaluator translate_wavefunction(const KernelModel& model, WaveEvaluator psi, int l1,
                                     int l2) {
  const double aa = kCellWidth;
  switch (model.variant) {
    case KernelVariant::Example1:
      return [psi = std::move(psi), aa, l1, l2](double x, double y) {
        return std::polar(1.0, 0.5 * aa * (l1 * y - l2 * x)) * psi(x + aa * l1, y + aa * l2);
      };
    case KernelVariant::Example2:
      return [psi = std::move(psi), aa, l1, l2](double x, double y) {
        return std::polar(1.0, aa * l2 * (x - y)) * psi(x, y + aa * l1);
      };
    case KernelVariant::Example3:
      return [psi = std::move(psi), aa, l1, l2](double x, double y) {
        return std::polar(1.0, -aa * l2 * y) * psi(x, y + aa * (l1 + l2));
      };
  }
  throw std::logic_error("unknown kernel variant");
}

complexd overlap2d(const KernelModel& model, const SeedFunction& seed, int l1, int l2,
                   const QuadSpec& quad) {
  return overlap_values(model, seed, {{l1, l2}}, quad)[0];
}

std::vector<OverlapEntry> overlap_table(const KernelModel& model, const SeedFunction& seed,
                                        int l_max, const QuadSpec& quad) {
  if (l_max < 0) throw std::invalid_argument("overlap_table needs l_max >= 0");
  std::vector<std::pair<int, int>> pairs;
  for (int l1 = -l_max; l1 <= l_max; ++l1)
    for (int l2 = -l_max; l2 <= l_max; ++l2) pairs.emplace_back(l1, l2);
  const std::vector<complexd> vals = overlap_values(model, seed, pairs, quad);

  LatticeParams params;
  params.L = std::max(l_max, 1);
  const OverlapLattice lat = overlap_lattice(seed, params);

  std::vector<OverlapEntry> out(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out[p].l1 = pairs[p].first;
    out[p].l2 = pairs[p].second;
    out[p].value = vals[p];
    out[p].oracle_abs = std::abs(lat.at(pairs[p].first, pairs[p].second));
    out[p].abs_error = std::fabs(std::abs(vals[p]) - out[p].oracle_abs);
  }
  return out;
}

}  // namespace seedmra
