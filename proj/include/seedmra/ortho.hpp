#pragma once

// Orthonormalization trick: from the overlap lattice of an admissible seed,
// build the Gram symbol
//
//     S(p) = Sum_{l in Z^2} S_l e^{i p.l},   p in [0, 2pi)^2,
//
// the Fourier coefficients f_m of 1/sqrt(S), and the orthonormalized filter
//
//     H_n = (1/sqrt(a)) Int h(s) e^{i a s n/2} / sqrt(S(as, 0)) ds,
//
// whose autocorrelation satisfies the pairwise orthonormality condition even
// when the seed's own coefficients do not.
//
// The symbol of the Hermitian translate form is real and positive; the
// positive square root is taken everywhere, so f_{0,0} > 0.  Symbols whose
// minimum sample falls to 1e-8 of their maximum, or whose imaginary residue
// exceeds 1e-10 * max(1, max sample), are rejected with SingularSymbol: the
// translate lattice is not a Riesz basis and the construction is undefined.

#include <vector>

#include "seedmra/filter.hpp"
#include "seedmra/overlap.hpp"
#include "seedmra/seed.hpp"

namespace seedmra {

struct SymbolGrid {
  int n1 = 0;  // grid sizes: p_k = 2 pi j / n_k, j = 0..n_k-1
  int n2 = 0;
  int L = 0;  // series truncation inherited from the lattice
  std::vector<complexd> values;  // n1*n2 samples, index j1*n2 + j2
  std::vector<complexd> slice;   // n1 samples of S(p1, 0)
  double min_real = 0.0;
  double max_real = 0.0;
  double max_imag = 0.0;  // largest |Im| seen; rounding-level for valid data

  const complexd& at(int j1, int j2) const { return values[std::size_t(j1) * n2 + j2]; }
};

// Direct truncated Fourier series of the overlap data on the uniform grid.
// Requires n1, n2 >= 2L+1 so the series is resolved.
SymbolGrid symbol(const OverlapLattice& lat, int n1 = 256, int n2 = 256);

struct FCoefficients {
  int L = 0;
  std::vector<complexd> values;  // (2L+1)^2, index (m1+L)*(2L+1) + (m2+L)

  complexd at(int m1, int m2) const {
    if (m1 < -L || m1 > L || m2 < -L || m2 > L) return {0.0, 0.0};
    return values[std::size_t(m1 + L) * (2 * L + 1) + (m2 + L)];
  }
};

// 2D Fourier coefficients of 1/sqrt(S) on the grid, returned for |m| <= L.
// Throws SingularSymbol when the symbol fails the positivity checks above.
FCoefficients f_coefficients(const SymbolGrid& sym);

// Orthonormalized filter for |n| <= n_range.  Position-domain symbolic seeds
// integrate against the slice series directly (composite Gauss-Legendre per
// segment); Sampled seeds integrate on their own grid with the slice linearly
// interpolated; frequency-domain and closure seeds are handled in coefficient
// space, H_n = Sum_k g_k h_{n+2k} with g the Fourier coefficients of
// 1/sqrt(S(p, 0)).
FilterSequence ont_filter(const SeedFunction& seed, const OverlapLattice& lat,
                          const SymbolGrid& sym, int n_range = 32);

// Orthonormalized seed H(x) = Sum_m f_m e^{i x a m1} h(x + a m2), assembled
// on a uniform grid (Sampled kind) covering all shifted supports.
SeedFunction ont_seed(const SeedFunction& seed, const FCoefficients& f,
                      double dx = kCellWidth / 128.0);

}  // namespace seedmra
