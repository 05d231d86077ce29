#include "seedmra/cascade.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "seedmra/errors.hpp"
#include "seedmra/format.hpp"

namespace seedmra {

namespace {

// One refinement step on the window [0, span]: new[i] = sqrt(2) Sum_k g_k
// old[2i - k*2^level], indices outside the window contributing zero.
void refine(const std::vector<complexd>& taps, int level, std::vector<complexd>& old_v,
            std::vector<complexd>& new_v) {
  const long long count = static_cast<long long>(old_v.size());
  const long long stride = 1LL << level;
  const double root2 = std::sqrt(2.0);
  for (long long i = 0; i < count; ++i) {
    complexd acc{0.0, 0.0};
    for (std::size_t k = 0; k < taps.size(); ++k) {
      const long long j = 2 * i - static_cast<long long>(k) * stride;
      if (j >= 0 && j < count) acc += taps[k] * old_v[static_cast<std::size_t>(j)];
    }
    new_v[static_cast<std::size_t>(i)] = root2 * acc;
  }
}

std::vector<complexd> shifted_taps(const FilterSequence& f, int& n_min_out) {
  const FilterSequence t = trimmed(f, 1e-14);
  n_min_out = t.n_min;
  return t.coeffs;
}

}  // namespace

CascadeResult cascade_scaling(const FilterSequence& f, int iterations, int level) {
  if (iterations < 1) throw std::invalid_argument("cascade needs iterations >= 1");
  if (level < 0 || level > 24) throw std::invalid_argument("cascade level out of range [0, 24]");
  if (f.truncated_tail)
    throw std::invalid_argument("filter tail is not negligible: cascade needs finite support");

  int n_min = 0;
  const std::vector<complexd> taps = shifted_taps(f, n_min);
  const int span = std::max(static_cast<int>(taps.size()) - 1, 1);
  const long long stride = 1LL << level;
  const std::size_t count = static_cast<std::size_t>(span) * stride + 1;

  // Indicator of [0, 1) on the grid.
  std::vector<complexd> cur(count, complexd{0.0, 0.0});
  for (long long i = 0; i < stride && i < static_cast<long long>(count); ++i)
    cur[static_cast<std::size_t>(i)] = complexd{1.0, 0.0};

  std::vector<complexd> next(count);
  double diff = 0.0;
  for (int it = 0; it < iterations; ++it) {
    refine(taps, level, cur, next);
    diff = 0.0;
    double sup = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      diff = std::max(diff, std::abs(next[i] - cur[i]));
      sup = std::max(sup, std::abs(next[i]));
    }
    cur.swap(next);
    if (sup > 1e6) throw Diverged("cascade iterate sup-norm exceeded 1e6");
  }

  CascadeResult out;
  out.phi.x_min = n_min;
  out.phi.x_max = n_min + span;
  out.phi.level = level;
  out.phi.values = std::move(cur);
  out.residual = diff;
  out.index_shift = n_min;
  return out;
}

SampledFunction mother_wavelet(const FilterSequence& f, const SampledFunction& phi) {
  int n_min = 0;
  const std::vector<complexd> taps = shifted_taps(f, n_min);
  const int N = static_cast<int>(taps.size()) - 1;
  const int level = phi.level;
  const long long stride = 1LL << level;
  const long long phi_count = static_cast<long long>(phi.values.size());

  SampledFunction psi;
  psi.level = level;
  psi.x_min = -0.5 * (N + 1);
  psi.x_max = psi.x_min + std::max(N, 1);
  const std::size_t count = static_cast<std::size_t>(std::max(N, 1)) * stride + 1;
  psi.values.assign(count, complexd{0.0, 0.0});

  const double root2 = std::sqrt(2.0);
  // psi(x) = sqrt(2) Sum_{n=-N-1}^{-1} (-1)^{n-1} conj(g_{-n-1}) phi_0(2x-n);
  // on the grid 2x - n lands on phi_0's own grid exactly.
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    complexd acc{0.0, 0.0};
    for (int n = -N - 1; n <= -1; ++n) {
      const complexd g = taps[static_cast<std::size_t>(-n - 1)];
      // phi_0 argument: 2 x_i - n with x_i = x_min + i 2^{-level}.
      const long long j = (-(N + 1) - n) * stride + 2 * i;
      if (j < 0 || j >= phi_count) continue;
      const double sign = ((n - 1) & 1LL) ? -1.0 : 1.0;
      acc += sign * std::conj(g) * phi.values[static_cast<std::size_t>(j)];
    }
    psi.values[static_cast<std::size_t>(i)] = root2 * acc;
  }
  return psi;
}

double refinement_residual(const FilterSequence& f, const SampledFunction& phi) {
  int n_min = 0;
  const std::vector<complexd> taps = shifted_taps(f, n_min);
  std::vector<complexd> cur = phi.values;
  std::vector<complexd> next(cur.size());
  refine(taps, phi.level, cur, next);
  double diff = 0.0;
  for (std::size_t i = 0; i < cur.size(); ++i) diff = std::max(diff, std::abs(next[i] - cur[i]));
  return diff;
}

complexd sampled_integral(const SampledFunction& g) {
  complexd acc{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < g.values.size(); ++i) acc += g.values[i];
  return acc * g.step();
}

double sampled_l2_norm_sq(const SampledFunction& g) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < g.values.size(); ++i) acc += std::norm(g.values[i]);
  return acc * g.step();
}

complexd inner_translate(const SampledFunction& g, const SampledFunction& h, int k) {
  if (g.level != h.level)
    throw std::invalid_argument("inner_translate needs matching grid levels");
  const double step = g.step();
  const double off_real = (g.x_min - k - h.x_min) / step;
  const double off_round = std::round(off_real);
  if (std::fabs(off_real - off_round) > 1e-9)
    throw std::invalid_argument("inner_translate: shifted grids do not align");
  const long long off = static_cast<long long>(off_round);

  // Half-open cells: the last sample of each factor owns no cell.
  const long long g_cells = static_cast<long long>(g.values.size()) - 1;
  const long long h_cells = static_cast<long long>(h.values.size()) - 1;
  long long i_lo = 0, i_hi = g_cells - 1;
  i_lo = std::max(i_lo, -off);
  i_hi = std::min(i_hi, h_cells - 1 - off);
  complexd acc{0.0, 0.0};
  for (long long i = i_lo; i <= i_hi; ++i)
    acc += g.values[static_cast<std::size_t>(i)] *
           std::conj(h.values[static_cast<std::size_t>(i + off)]);
  return acc * step;
}

TranslateCheck check_translate_orthonormality(const SampledFunction& g, int k_max, double tol) {
  if (k_max < 1) throw std::invalid_argument("check_translate_orthonormality needs k_max >= 1");
  TranslateCheck out;
  for (int k = -k_max; k <= k_max; ++k) {
    const complexd v = inner_translate(g, g, k);
    const double target = (k == 0) ? 1.0 : 0.0;
    out.residual = std::max(out.residual, std::abs(v - target));
  }
  out.pass = out.residual <= tol;
  return out;
}

std::string sampled_csv(const SampledFunction& g) {
  std::string out = "x,re,im\n";
  const double step = g.step();
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const double x = g.x_min + step * static_cast<double>(i);
    out += fmt_g17(x);
    out += ',';
    out += fmt_g17(g.values[i].real());
    out += ',';
    out += fmt_g17(g.values[i].imag());
    out += '\n';
  }
  return out;
}

}  // namespace seedmra
