#include "seedmra/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seedmra/errors.hpp"
#include "seedmra/format.hpp"

namespace seedmra {

namespace {

// Int g(s) conj(g(s + a m)) e^{-i k a s} ds for the Gaussian kind:
//   |A|^2 e^{-pi (m^2 + k^2)} e^{-i a (mu m + center k)},
// the cross phase e^{i a^2 k m / 2} being a whole number of turns.
complexd gaussian_pairing(const GaussianData& g, std::int64_t m, std::int64_t k) {
  if (g.hermite != 0)
    throw UnsupportedOperation("overlap lattice is defined for hermite-0 gaussian seeds");
  const double mag = std::norm(g.scale) *
                     std::exp(-kPi * (static_cast<double>(m * m) + static_cast<double>(k * k)));
  const double phase = -kCellWidth * (g.mu * static_cast<double>(m) +
                                      g.center * static_cast<double>(k));
  if (phase == 0.0) return {mag, 0.0};
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

// Trapezoid pairing for sampled data on the common refinement of the grid
// and the shifted grid, with oscillation-driven subdivision.
complexd sampled_pairing(const SeedFunction& seed, std::int64_t m, std::int64_t k) {
  const SampledData& d = seed.samples;
  const double xmin = d.x0;
  const double xmax = d.x0 + d.dx * static_cast<double>(d.values.size() - 1);
  const double shift = kCellWidth * static_cast<double>(m);
  const double lo = std::max(xmin, xmin - shift);
  const double hi = std::min(xmax, xmax - shift);
  if (lo >= hi) return {0.0, 0.0};

  std::vector<double> nodes;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const double s = d.x0 + d.dx * static_cast<double>(i);
    if (s >= lo && s <= hi) nodes.push_back(s);
    const double t = s - shift;
    if (t >= lo && t <= hi) nodes.push_back(t);
  }
  nodes.push_back(lo);
  nodes.push_back(hi);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
              nodes.end());

  const double rate = kCellWidth * std::fabs(static_cast<double>(k));
  auto f = [&](double s) {
    const complexd v = seed.eval(s) * std::conj(seed.eval(s + shift));
    if (k == 0) return v;
    const double th = -rate * (k > 0 ? 1.0 : -1.0) * s;
    return v * complexd{std::cos(th), std::sin(th)};
  };

  complexd sum{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double w = nodes[i + 1] - nodes[i];
    const int sub = std::max(1, static_cast<int>(std::ceil(rate * w / 0.5)));
    const double h = w / sub;
    for (int j = 0; j < sub; ++j) {
      const double s0 = nodes[i] + j * h;
      sum += 0.5 * h * (f(s0) + f(s0 + h));
    }
  }
  return sum;
}

void check_sampled_coverage(const SeedFunction& seed) {
  const auto& v = seed.samples.values;
  double peak = 0.0;
  for (const complexd& c : v) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return;
  const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
  if (edge > 1e-8 * peak)
    throw QuadratureDivergence(
        "sampled grid truncates the seed: boundary samples are not negligible");
}

}  // namespace

OverlapLattice overlap_lattice(const SeedFunction& seed, const LatticeParams& params) {
  params.validate();
  const int L = params.L;
  OverlapLattice lat;
  lat.params = params;
  lat.values.assign(static_cast<std::size_t>((2 * L + 1) * (2 * L + 1)), {0.0, 0.0});

  if (seed.kind == SeedKind::Sampled) check_sampled_coverage(seed);
  // A closure is the transform of stored segment data; the lattice pairing of
  // the element is domain-independent, so evaluate it on that dual data.
  if (seed.kind == SeedKind::AnalyticClosure) return overlap_lattice(seed.fourier(), params);

  const bool freq = seed.domain == Domain::Frequency;
  for (int l1 = -L; l1 <= L; ++l1) {
    for (int l2 = -L; l2 <= L; ++l2) {
      // Position form shifts by l2 and modulates with l1; the frequency form
      // exchanges the roles (shift -l1, modulate l2).
      const std::int64_t m = freq ? -l1 : l2;
      const std::int64_t k = freq ? l2 : l1;
      complexd s;
      if (seed.is_piecewise())
        s = lattice_pairing(seed.segments, m, k);
      else if (seed.kind == SeedKind::Gaussian)
        s = gaussian_pairing(seed.gauss, m, k);
      else
        s = sampled_pairing(seed, m, k);
      lat.values[static_cast<std::size_t>((l1 + L) * (2 * L + 1) + (l2 + L))] = s;
    }
  }
  return lat;
}

OncResult check_onc(const OverlapLattice& lat, double tol) {
  const int L = lat.params.L;
  double residual = 0.0;
  for (int l1 = -L; l1 <= L; ++l1)
    for (int l2 = -L; l2 <= L; ++l2) {
      const double target = (l1 == 0 && l2 == 0) ? 1.0 : 0.0;
      residual = std::max(residual, std::abs(lat.at(l1, l2) - complexd{target, 0.0}));
    }
  return {residual <= tol, residual};
}

MoncResult check_monc(const OverlapLattice& lat, double tol) {
  const int L = lat.params.L;
  const double tail = std::max(std::abs(lat.at(0, L)), std::abs(lat.at(0, -L)));
  if (tail > tol)
    throw NonSummable("overlap column S_{0,l2} has not decayed below tolerance at |l2| = " +
                      std::to_string(L));
  double off = 0.0;
  for (int l1 = -L; l1 <= L; ++l1) {
    if (l1 == 0) continue;
    for (int l2 = -L; l2 <= L; ++l2) off = std::max(off, std::abs(lat.at(l1, l2)));
  }
  complexd sigma{0.0, 0.0};
  for (int l2 = -L; l2 <= L; ++l2) sigma += lat.at(0, l2);
  const bool pass = off <= tol && std::fabs(sigma.imag()) <= tol;
  return {pass, sigma.real()};
}

std::string overlap_csv(const OverlapLattice& lat) {
  std::ostringstream out;
  out << "l1,l2,re,im,abs\n";
  const int L = lat.params.L;
  for (int l1 = -L; l1 <= L; ++l1)
    for (int l2 = -L; l2 <= L; ++l2) {
      const complexd v = lat.at(l1, l2);
      out << l1 << ',' << l2 << ',' << fmt_g17(v.real()) << ',' << fmt_g17(v.imag()) << ','
          << fmt_g17(std::abs(v)) << '\n';
    }
  return out.str();
}

}  // namespace seedmra
