#pragma once

// Seed functions h in L2(R) and their closed-form Fourier data.
//
// Convention:  hhat(p) = (1/sqrt(2*pi)) Int e^{-i p s} h(s) ds.
//
// The lattice cell width is a = 2*sqrt(pi), so a^2 = 4*pi.  Piecewise kinds
// are unions of half-open segments [start*a, end*a) with rational start/end
// (in units of a) carrying a complex amplitude and a modulation e^{i mu s}.
// The modulation frequency splits as
//
//     mu = mu_cells * (a/2) + mu_rad,          mu_cells rational,
//
// which keeps every phase that matters on the lattice an exact rational
// number of turns (see rational.hpp).  Evaluation is additive over covering
// segments; the JSON loader rejects overlaps, internal builders (the
// cell-supported filter seed) rely on superposition.
//
// Gaussian kind: scale * pi^{-1/4} * P_h(s - center) * e^{i mu s}
// * e^{-(s-center)^2/2}, with P_0 = 1 and P_1(u) = sqrt(2) u (first excited
// oscillator state).  Closed under the transform.
//
// A Position-domain seed stores h(s); a Frequency-domain seed stores hhat(p).
// fourier() switches between the two representations of the same element (an
// involution).  The transform of a piecewise kind is an analytic closure that
// evaluates the finite sum of segment integrals at any point.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "seedmra/rational.hpp"

namespace seedmra {

using complexd = std::complex<double>;

inline const double kPi = 3.14159265358979323846264338327950288;
// a = 2*sqrt(pi): the only cell width for which integer lattice phases
// a^2*l1*l2 are whole turns.
inline const double kCellWidth = 2.0 * std::sqrt(kPi);

struct LatticeParams {
  double a = kCellWidth;
  int L = 8;  // truncation radius of lattice sums

  void validate() const;
};

struct Segment {
  Rational start;  // in units of a
  Rational end;    // in units of a, start < end
  complexd amp = {0.0, 0.0};
  Rational mu_cells;   // modulation, units of a/2 (exact part)
  double mu_rad = 0.0; // modulation remainder, rad per unit argument

  double mu() const { return mu_cells.to_double() * (kCellWidth / 2.0) + mu_rad; }
};

enum class Domain { Position, Frequency };
enum class SeedKind { PiecewiseConstant, PiecewiseModulated, Gaussian, Sampled, AnalyticClosure };

struct GaussianData {
  double center = 0.0;
  double mu = 0.0;
  complexd scale = {1.0, 0.0};
  int hermite = 0;  // 0 or 1
};

struct SampledData {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<complexd> values;
};

struct SeedFunction {
  Domain domain = Domain::Position;
  SeedKind kind = SeedKind::PiecewiseConstant;
  std::vector<Segment> segments;  // piecewise kinds and closures
  GaussianData gauss;             // Gaussian kind
  SampledData samples;            // Sampled kind
  // AnalyticClosure: value(p) = (1/sqrt(2*pi)) Sum_j amp_j
  //   Int_{seg_j} e^{i (mu_j + closure_sign * p) s} ds,  sign -1 = forward.
  int closure_sign = -1;

  // Pointwise value of the stored data function.
  complexd eval(double x) const;
  // Exact value of piecewise data at x = r*a: segment membership decided in
  // rational arithmetic, which the half-open convention needs at lattice
  // points. Falls back to eval(r*a) for non-piecewise kinds.
  complexd eval_at_rational(const Rational& r) const;

  // Squared L2 norm of the data function.
  double l2_norm_sq() const;

  // The same element described in the other domain. Unsupported for Sampled.
  SeedFunction fourier() const;

  bool is_piecewise() const {
    return kind == SeedKind::PiecewiseConstant || kind == SeedKind::PiecewiseModulated;
  }
  bool is_symbolic() const { return kind != SeedKind::Sampled; }

  // Support bounds of the data (for quadrature windows). Gaussians report
  // center +- width; closures report the bounds of the underlying segments'
  // dual decay, i.e. unbounded, encoded as +-inf.
  void support_hint(double& lo, double& hi) const;

  SeedFunction scaled(const complexd& c) const;

  static SeedFunction piecewise(Domain domain, std::vector<Segment> segs);
  static SeedFunction gaussian(double center = 0.0, double mu = 0.0,
                               complexd scale = {1.0, 0.0}, int hermite = 0);
  static SeedFunction sampled(double x0, double dx, std::vector<complexd> values,
                              Domain domain = Domain::Position);
};

// Int_{a r0}^{a r1} e^{i kappa s} ds where the phase at s = a*r is
// 2*pi*T*r + d*r (T rational turns per cell, d real rad per cell).
complexd cell_exp_integral(const Rational& r0, const Rational& r1, const Rational& T, double d);

// Int f(s) conj(f(s + a m)) e^{-i k a s} ds for additive piecewise data f.
// The workhorse behind overlap lattices, norms and coefficient extraction.
complexd lattice_pairing(const std::vector<Segment>& segs, std::int64_t m, std::int64_t k);

// JSON round trip. Schema documented in README.md.
SeedFunction seed_from_json(const std::string& text);
std::string seed_to_json(const SeedFunction& seed);
SeedFunction load_seed_file(const std::string& path);

}  // namespace seedmra
