#pragma once

// Cross-check of the overlap lattice against three explicit integral-kernel
// models.  Each model turns a seed h and a normalized auxiliary state phi0
// into a 2D wavefunction
//
//     Psi(x, y) = Int Int K(x, y; s, t) phi0(s) h(t) ds dt,
//
// carries a pair of commuting lattice translation operators, and must
// reproduce the same overlap magnitudes |<Psi_{l1,l2}, Psi_{0,0}>| = |S_l|
// regardless of the kernel and of the choice of phi0.  All three kernels are
// pure phases divided by 2 pi; the double integral collapses to closed forms
// or 1D quadratures per model:
//
//   Example1: K = (1/2pi) e^{i(xt + ys - st - xy/2)}
//             Psi = (1/sqrt(2pi)) e^{-ixy/2} Int h(t) phi0hat(t-y) e^{ixt} dt
//   Example2: K = (1/2pi) e^{i x(s-t) + i y t}
//             Psi = phi0hat(-x) hhat(x-y)            (no quadrature at all)
//   Example3: K = (1/2pi) e^{(i/2)(x^2 + 2(yt - xs) + s^2 - t^2)}
//             Psi = e^{ix^2/2} A(x) B(y),  A, B single Fourier-type integrals
//
// Translations act as (a = cell width):
//   Example1: e^{i(a/2)(l1 y - l2 x)} f(x + a l1, y + a l2)
//   Example2: e^{i a l2 (x - y)}      f(x, y + a l1)
//   Example3: e^{-i a l2 y}           f(x, y + a l1 + a l2)
//
// Phases across models follow different gauge conventions; comparisons are
// made in magnitude.  Overlaps use a truncated 2D trapezoid rule; a boundary
// ring check throws QuadratureDivergence when the wavefunction has not
// decayed at the window edge (slowly decaying seeds).

#include <functional>
#include <vector>

#include "seedmra/overlap.hpp"
#include "seedmra/seed.hpp"

namespace seedmra {

enum class KernelVariant { Example1, Example2, Example3 };

struct KernelModel {
  KernelVariant variant = KernelVariant::Example1;
  SeedFunction phi0 = SeedFunction::gaussian();

  // phi0 must be normalized: | ||phi0||^2 - 1 | <= 1e-10.
  void validate() const;
};

struct QuadSpec {
  double radius = 8.0;  // (x, y) window [-radius, radius]^2
  int nodes = 257;      // trapezoid nodes per axis

  void validate() const;
};

// Pointwise kernel value; |K| = 1/(2 pi) for every variant.
complexd kernel(const KernelModel& model, double x, double y, double s, double t);

// Reduced-form wavefunction value (closed form or 1D quadrature).
// The seed must be position-domain data.
complexd wavefunction(const KernelModel& model, const SeedFunction& seed, double x, double y,
                      const QuadSpec& quad = {});

// Slow reference path: nested 1D quadratures of the raw double integral.
// Used to validate the reduced forms against an independent evaluation.
complexd wavefunction_direct(const KernelModel& model, const SeedFunction& seed, double x,
                             double y, const QuadSpec& quad = {});

using WaveEvaluator = std::function<complexd(double, double)>;

// Wraps an evaluator with the model's translation phase and shift.
WaveEvaluator translate_wavefunction(const KernelModel& model, WaveEvaluator psi, int l1, int l2);

// <Psi_{l1,l2}, Psi_{0,0}> by the truncated 2D trapezoid rule.
complexd overlap2d(const KernelModel& model, const SeedFunction& seed, int l1, int l2,
                   const QuadSpec& quad = {});

struct OverlapEntry {
  int l1 = 0;
  int l2 = 0;
  complexd value;           // <Psi_l, Psi_0>
  double oracle_abs = 0.0;  // |S_l| from the overlap lattice
  double abs_error = 0.0;   // | |value| - oracle_abs |
};

// Full table over |l1|, |l2| <= l_max, with the lattice overlap magnitudes
// as oracle. Entries in l1-major order.
std::vector<OverlapEntry> overlap_table(const KernelModel& model, const SeedFunction& seed,
                                        int l_max, const QuadSpec& quad = {});

}  // namespace seedmra
