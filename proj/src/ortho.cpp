#include "seedmra/ortho.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "seedmra/errors.hpp"
#include "seedmra/quadrature.hpp"

namespace seedmra {

namespace {

double singular_floor(const SymbolGrid& sym) { return 1e-8 * sym.max_real; }

void require_invertible(const SymbolGrid& sym) {
  if (sym.max_imag > 1e-10 * std::max(1.0, sym.max_real))
    throw SingularSymbol("symbol has non-real samples beyond tolerance");
  if (!(sym.min_real > singular_floor(sym)))
    throw SingularSymbol("symbol minimum within 1e-8 of zero: translates are not a Riesz basis");
}

// Row sums C_{l1} = Sum_{l2} S_{l1,l2}: coefficients of the slice series
// S(p, 0) = Sum_{l1} C_{l1} e^{i p l1}.
std::vector<complexd> slice_coefficients(const OverlapLattice& lat) {
  const int L = lat.params.L;
  std::vector<complexd> C(2 * L + 1);
  for (int l1 = -L; l1 <= L; ++l1) {
    complexd acc = lat.at(l1, 0);
    for (int l2 = 1; l2 <= L; ++l2) acc += lat.at(l1, l2) + lat.at(l1, -l2);
    C[std::size_t(l1 + L)] = acc;
  }
  return C;
}

double slice_value(const std::vector<complexd>& C, int L, double p, double floor) {
  complexd acc = C[std::size_t(L)];
  for (int l = 1; l <= L; ++l) {
    const complexd z = std::polar(1.0, p * l);
    acc += C[std::size_t(L + l)] * z + C[std::size_t(L - l)] * std::conj(z);
  }
  const double v = acc.real();
  if (!(v > floor)) throw SingularSymbol("slice dips below the singularity floor between grid nodes");
  return v;
}

}  // namespace

SymbolGrid symbol(const OverlapLattice& lat, int n1, int n2) {
  const int L = lat.params.L;
  const int W = 2 * L + 1;
  if (n1 < W || n2 < W)
    throw std::invalid_argument("symbol grid does not resolve the lattice: need n >= 2L+1");

  SymbolGrid sym;
  sym.n1 = n1;
  sym.n2 = n2;
  sym.L = L;
  sym.values.assign(std::size_t(n1) * n2, complexd{0.0, 0.0});
  sym.slice.assign(std::size_t(n1), complexd{0.0, 0.0});

  // Stage 1: G[j1][l2] = Sum_{l1} S_{l1,l2} e^{i p1 l1}.
  std::vector<complexd> G(std::size_t(n1) * W);
  for (int j1 = 0; j1 < n1; ++j1) {
    const double p1 = 2.0 * kPi * j1 / n1;
    for (int l2 = -L; l2 <= L; ++l2) {
      complexd acc = lat.at(0, l2);
      for (int l1 = 1; l1 <= L; ++l1) {
        const complexd z = std::polar(1.0, p1 * l1);
        acc += lat.at(l1, l2) * z + lat.at(-l1, l2) * std::conj(z);
      }
      G[std::size_t(j1) * W + (l2 + L)] = acc;
    }
  }

  // Stage 2: values[j1][j2] = Sum_{l2} G[j1][l2] e^{i p2 l2}; the slice is the
  // p2 = 0 column.
  std::vector<complexd> e2(std::size_t(L) + 1);
  for (int j2 = 0; j2 < n2; ++j2) {
    const double p2 = 2.0 * kPi * j2 / n2;
    for (int l2 = 1; l2 <= L; ++l2) e2[std::size_t(l2)] = std::polar(1.0, p2 * l2);
    for (int j1 = 0; j1 < n1; ++j1) {
      const complexd* row = &G[std::size_t(j1) * W];
      complexd acc = row[L];
      for (int l2 = 1; l2 <= L; ++l2)
        acc += row[L + l2] * e2[std::size_t(l2)] + row[L - l2] * std::conj(e2[std::size_t(l2)]);
      sym.values[std::size_t(j1) * n2 + j2] = acc;
    }
  }
  for (int j1 = 0; j1 < n1; ++j1) {
    const complexd* row = &G[std::size_t(j1) * W];
    complexd acc = row[L];
    for (int l2 = 1; l2 <= L; ++l2) acc += row[L + l2] + row[L - l2];
    sym.slice[std::size_t(j1)] = acc;
  }

  sym.min_real = sym.values[0].real();
  sym.max_real = sym.values[0].real();
  sym.max_imag = 0.0;
  for (const complexd& v : sym.values) {
    sym.min_real = std::min(sym.min_real, v.real());
    sym.max_real = std::max(sym.max_real, v.real());
    sym.max_imag = std::max(sym.max_imag, std::fabs(v.imag()));
  }
  return sym;
}

FCoefficients f_coefficients(const SymbolGrid& sym) {
  require_invertible(sym);
  const int L = sym.L, n1 = sym.n1, n2 = sym.n2, W = 2 * L + 1;

  // Inverse root samples; positivity holds after require_invertible.
  std::vector<double> w(std::size_t(n1) * n2);
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = 1.0 / std::sqrt(sym.values[j].real());

  // Stage 1: A[j1][m2] = Sum_{j2} w[j1][j2] e^{-i p2 m2}.
  std::vector<complexd> phase2(std::size_t(W) * n2);
  for (int m2 = -L; m2 <= L; ++m2)
    for (int j2 = 0; j2 < n2; ++j2)
      phase2[std::size_t(m2 + L) * n2 + j2] = std::polar(1.0, -2.0 * kPi * j2 * m2 / n2);
  std::vector<complexd> A(std::size_t(n1) * W);
  for (int j1 = 0; j1 < n1; ++j1) {
    const double* wrow = &w[std::size_t(j1) * n2];
    for (int m2 = -L; m2 <= L; ++m2) {
      const complexd* ph = &phase2[std::size_t(m2 + L) * n2];
      complexd acc{0.0, 0.0};
      for (int j2 = 0; j2 < n2; ++j2) acc += wrow[j2] * ph[j2];
      A[std::size_t(j1) * W + (m2 + L)] = acc;
    }
  }

  // Stage 2: f[m1][m2] = (1/(n1 n2)) Sum_{j1} A[j1][m2] e^{-i p1 m1}.
  FCoefficients f;
  f.L = L;
  f.values.assign(std::size_t(W) * W, complexd{0.0, 0.0});
  const double norm = 1.0 / (double(n1) * double(n2));
  for (int m1 = -L; m1 <= L; ++m1) {
    for (int m2 = -L; m2 <= L; ++m2) {
      complexd acc{0.0, 0.0};
      for (int j1 = 0; j1 < n1; ++j1)
        acc += A[std::size_t(j1) * W + (m2 + L)] * std::polar(1.0, -2.0 * kPi * j1 * m1 / n1);
      f.values[std::size_t(m1 + L) * W + (m2 + L)] = acc * norm;
    }
  }
  return f;
}

FilterSequence ont_filter(const SeedFunction& seed, const OverlapLattice& lat,
                          const SymbolGrid& sym, int n_range) {
  if (n_range < 1) throw std::invalid_argument("ont_filter needs n_range >= 1");
  require_invertible(sym);
  const double a = lat.params.a;
  const int L = lat.params.L;
  const double floor = singular_floor(sym);

  FilterSequence out;
  out.n_min = -n_range;
  out.n_max = n_range;
  out.provenance = FilterSequence::Provenance::Orthonormalized;
  out.coeffs.assign(std::size_t(2 * n_range + 1), complexd{0.0, 0.0});

  const bool direct_position = seed.domain == Domain::Position &&
                               (seed.is_piecewise() || seed.kind == SeedKind::Gaussian ||
                                seed.kind == SeedKind::Sampled);

  if (direct_position) {
    const std::vector<complexd> C = slice_coefficients(lat);
    const double inv_root_a = 1.0 / std::sqrt(a);
    if (seed.kind == SeedKind::Sampled) {
      // Trapezoid on the sample grid, refined so every oscillation is
      // resolved; the slice is linearly interpolated from the symbol grid.
      const SampledData& sd = seed.samples;
      const std::size_t count = sd.values.size();
      auto slice_interp = [&](double s) {
        double u = std::fmod(a * s, 2.0 * kPi);
        if (u < 0.0) u += 2.0 * kPi;
        const double t = u * sym.n1 / (2.0 * kPi);
        const int j = std::min(int(t), sym.n1 - 1);
        const double frac = t - j;
        const double v0 = sym.slice[std::size_t(j)].real();
        const double v1 = sym.slice[std::size_t((j + 1) % sym.n1)].real();
        const double v = v0 + frac * (v1 - v0);
        if (!(v > floor)) throw SingularSymbol("interpolated slice below the singularity floor");
        return v;
      };
      for (int n = -n_range; n <= n_range; ++n) {
        const double kappa = 0.5 * a * n;
        const double rate = std::fabs(kappa) + a * L;
        const int sub = std::max(1, int(std::ceil(rate * sd.dx / 0.5)));
        complexd acc{0.0, 0.0};
        for (std::size_t i = 0; i + 1 < count; ++i) {
          const double x0 = sd.x0 + sd.dx * double(i);
          const complexd v0 = sd.values[i], v1 = sd.values[i + 1];
          const double h = sd.dx / sub;
          for (int q = 0; q < sub; ++q) {
            const double sa = x0 + h * q, sb = sa + h;
            const double fa = double(q) / sub, fb = double(q + 1) / sub;
            const complexd ga = (v0 + fa * (v1 - v0)) * std::polar(1.0, kappa * sa) /
                                std::sqrt(slice_interp(sa));
            const complexd gb = (v0 + fb * (v1 - v0)) * std::polar(1.0, kappa * sb) /
                                std::sqrt(slice_interp(sb));
            acc += 0.5 * h * (ga + gb);
          }
        }
        out.coeffs[std::size_t(n + n_range)] = acc * inv_root_a;
      }
    } else {
      // Per-segment (or full Gaussian window) composite Gauss-Legendre; the
      // integrand is smooth on each piece.
      struct Piece {
        double lo, hi;
        complexd amp;
        double mu;
        bool gaussian;
      };
      std::vector<Piece> pieces;
      if (seed.kind == SeedKind::Gaussian) {
        double lo, hi;
        seed.support_hint(lo, hi);
        pieces.push_back({lo, hi, {1.0, 0.0}, 0.0, true});
      } else {
        for (const Segment& s : seed.segments)
          pieces.push_back({s.start.to_double() * a, s.end.to_double() * a, s.amp, s.mu(), false});
      }
      for (int n = -n_range; n <= n_range; ++n) {
        const double kappa = 0.5 * a * n;
        complexd acc{0.0, 0.0};
        for (const Piece& pc : pieces) {
          const double rate = std::fabs(kappa + pc.mu) + a * L + (pc.gaussian ? 4.0 : 0.0);
          const PanelGrid grid(pc.lo, pc.hi, rate, 4.0, GaussLegendre::order16());
          for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
            const double s = grid.nodes[i];
            const complexd val = pc.gaussian ? seed.eval(s) : pc.amp * std::polar(1.0, pc.mu * s);
            acc += grid.weights[i] * val * std::polar(1.0, kappa * s) /
                   std::sqrt(slice_value(C, L, a * s, floor));
          }
        }
        out.coeffs[std::size_t(n + n_range)] = acc * inv_root_a;
      }
    }
  } else {
    // Coefficient space: 1/sqrt(S(p,0)) = Sum_k g_k e^{i k p}, so the
    // orthonormalized sequence is a discrete convolution over even shifts.
    const int kg = std::min(sym.n1 / 2 - 1, 32);
    std::vector<complexd> g(std::size_t(2 * kg + 1));
    for (int k = -kg; k <= kg; ++k) {
      complexd acc{0.0, 0.0};
      for (int j = 0; j < sym.n1; ++j)
        acc += (1.0 / std::sqrt(sym.slice[std::size_t(j)].real())) *
               std::polar(1.0, -2.0 * kPi * j * k / sym.n1);
      g[std::size_t(k + kg)] = acc / double(sym.n1);
    }
    const FilterSequence base = extract_filter(seed, n_range + 2 * kg);
    for (int n = -n_range; n <= n_range; ++n) {
      complexd acc{0.0, 0.0};
      for (int k = -kg; k <= kg; ++k) acc += g[std::size_t(k + kg)] * base.at(n + 2 * k);
      out.coeffs[std::size_t(n + n_range)] = acc;
    }
  }

  out.truncated_tail = std::abs(out.at(-n_range)) > 1e-12 || std::abs(out.at(n_range)) > 1e-12;
  return out;
}

SeedFunction ont_seed(const SeedFunction& seed, const FCoefficients& f, double dx) {
  if (!(dx > 0.0)) throw std::invalid_argument("ont_seed needs dx > 0");
  const double a = kCellWidth;
  const int L = f.L;
  double lo = 0.0, hi = 0.0;
  seed.support_hint(lo, hi);
  const double span_lo = lo - a * L;
  const double span_hi = hi + a * L;
  const int count = std::max(2, int(std::ceil((span_hi - span_lo) / dx)) + 1);

  std::vector<complexd> vals(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x = span_lo + dx * i;
    complexd acc{0.0, 0.0};
    for (int m1 = -L; m1 <= L; ++m1) {
      const complexd phase = std::polar(1.0, x * a * m1);
      for (int m2 = -L; m2 <= L; ++m2) {
        const complexd fm = f.at(m1, m2);
        if (fm.real() == 0.0 && fm.imag() == 0.0) continue;
        acc += fm * phase * seed.eval(x + a * m2);
      }
    }
    vals[std::size_t(i)] = acc;
  }
  return SeedFunction::sampled(span_lo, dx, std::move(vals), seed.domain);
}

}  // namespace seedmra
