#pragma once

// Scaling function and mother wavelet from a finite filter sequence.
//
// The refinement relation
//
//     phi(x) = sqrt(2) Sum_n h_n phi(2x - n)
//
// is iterated on a dyadic grid of step 2^{-level}, starting from the
// indicator of [0, 1) (Mallat cascade).  Iteration runs on the index-shifted
// taps g_k = h_{k+n_min}, k = 0..N (cleanest window [0, N]); the result is
// relabelled to the theoretical support [n_min, n_max].  The wavelet is
//
//     psi(x) = sqrt(2) Sum_n (-1)^{n-1} conj(g_{-n-1}) phi_0(2x - n),
//
// with phi_0 the window-normalized iterate; the conjugation is deliberate
// (standard QMF pairing) although only real filters are exercised by the
// acceptance suite.
//
// Integrals on sampled functions use the half-open cell (left-rectangle)
// rule: sample i covers [x_i, x_i + step).  Indicator-type functions then
// integrate exactly, which the orthonormality checks rely on.

#include <string>
#include <vector>

#include "seedmra/filter.hpp"

namespace seedmra {

struct SampledFunction {
  double x_min = 0.0;
  double x_max = 0.0;
  int level = 0;  // grid step 2^{-level}
  std::vector<complexd> values;

  double step() const { return std::ldexp(1.0, -level); }
};

struct CascadeResult {
  SampledFunction phi;
  double residual = 0.0;  // sup difference of the final two iterates
  int index_shift = 0;    // g_0 corresponds to h_{index_shift}
};

// Fixed-point iteration of the refinement operator.  The filter must carry
// its full support (truncated_tail flag off).  Throws Diverged when the
// iterate's sup-norm exceeds 1e6.
CascadeResult cascade_scaling(const FilterSequence& f, int iterations = 12, int level = 10);

// Wavelet on the same dyadic grid; phi must come from cascade_scaling with
// the same filter.
SampledFunction mother_wavelet(const FilterSequence& f, const SampledFunction& phi);

// Sup-norm distance between phi and one more refinement step.
double refinement_residual(const FilterSequence& f, const SampledFunction& phi);

// Half-open cell integrals.
complexd sampled_integral(const SampledFunction& g);
double sampled_l2_norm_sq(const SampledFunction& g);

// Int g(x) conj(h(x - k)) dx on the common grid (levels must match and the
// shifted grids must align).
complexd inner_translate(const SampledFunction& g, const SampledFunction& h, int k);

struct TranslateCheck {
  bool pass = false;
  double residual = 0.0;  // max_{|k| <= k_max} |<g, g(.-k)> - delta_{k,0}|
};

TranslateCheck check_translate_orthonormality(const SampledFunction& g, int k_max,
                                              double tol = 1e-10);

// Plot-ready CSV: header "x,re,im", one row per sample.
std::string sampled_csv(const SampledFunction& g);

}  // namespace seedmra
