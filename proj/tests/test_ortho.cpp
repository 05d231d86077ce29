#include <cmath>

#include "doctest.h"
#include "seedmra/errors.hpp"
#include "seedmra/filter.hpp"
#include "seedmra/ortho.hpp"
#include "seedmra/overlap.hpp"
#include "seedmra/presets.hpp"
#include "test_helpers.hpp"

using namespace seedmra;
using seedmra::testing::check_close;

namespace {

OverlapLattice lattice(const SeedFunction& s, int L) {
  LatticeParams params;
  params.L = L;
  return overlap_lattice(s, params);
}

}  // namespace

TEST_CASE("gaussian symbol hits the theta constants") {
  const SeedFunction g = seed_preset("gaussian");
  const SymbolGrid sym = symbol(lattice(g, 8), 64, 64);
  // S(0,0) = (sum_l e^{-pi l^2})^2 = theta(0)^2; grid point j=0 is exact.
  CHECK(sym.at(0, 0).real() == doctest::Approx(1.1803405990160967).epsilon(1e-12));
  CHECK(sym.max_imag <= 1e-12);
  CHECK(sym.min_real > 0.8);
  CHECK(sym.max_real == doctest::Approx(1.1803405990160967).epsilon(1e-12));
}

TEST_CASE("symbol grid must resolve the series") {
  CHECK_THROWS_AS(symbol(lattice(seed_preset("gaussian"), 8), 16, 16), std::invalid_argument);
}

TEST_CASE("orthonormal seed has a flat symbol and delta coefficients") {
  const SymbolGrid sym = symbol(lattice(seed_preset("haar"), 8), 64, 64);
  CHECK(sym.min_real == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sym.max_real == doctest::Approx(1.0).epsilon(1e-12));
  const FCoefficients fc = f_coefficients(sym);
  check_close(fc.at(0, 0), {1.0, 0.0}, 1e-12);
  for (int m1 = -fc.L; m1 <= fc.L; ++m1) {
    for (int m2 = -fc.L; m2 <= fc.L; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      CHECK(std::abs(fc.at(m1, m2)) <= 1e-12);
    }
  }
}

TEST_CASE("coefficients inherit hermitian symmetry from the real symbol") {
  const FCoefficients fc = f_coefficients(symbol(lattice(seed_preset("gaussian"), 6), 64, 64));
  for (int m1 = -4; m1 <= 4; ++m1) {
    for (int m2 = -4; m2 <= 4; ++m2) {
      check_close(fc.at(-m1, -m2), std::conj(fc.at(m1, m2)), 1e-12);
    }
  }
  CHECK(fc.at(0, 0).real() > 1.0);
}

TEST_CASE("orthonormalization is the identity on orthonormal seeds") {
  for (const char* name : {"haar", "row7"}) {
    CAPTURE(name);
    const SeedFunction s = seed_preset(name);
    const OverlapLattice lat = lattice(s, 8);
    const FilterSequence H = ont_filter(s, lat, symbol(lat, 64, 64), 16);
    const FilterSequence h = extract_filter(s, 16);
    double err = 0.0;
    for (int n = -16; n <= 16; ++n) err = std::max(err, std::abs(H.at(n) - h.at(n)));
    CHECK(err <= 1e-10);
    CHECK(H.provenance == FilterSequence::Provenance::Orthonormalized);
  }
}

TEST_CASE("scaled orthonormal seed divides by the root of sigma") {
  // Doubling an orthonormal seed gives the modified condition with sigma 4,
  // so the orthonormalized coefficients are the scaled ones divided by 2.
  const SeedFunction s = seed_preset("row3").scaled({2.0, 0.0});
  const OverlapLattice lat = lattice(s, 8);
  const FilterSequence H = ont_filter(s, lat, symbol(lat, 64, 64), 16);
  const FilterSequence h2 = extract_filter(s, 16);
  double err = 0.0;
  for (int n = -16; n <= 16; ++n) err = std::max(err, std::abs(H.at(n) - h2.at(n) / 2.0));
  CHECK(err <= 1e-8);
}

TEST_CASE("gaussian orthonormalization restores r1") {
  const SeedFunction g = seed_preset("gaussian");
  const OverlapLattice lat = lattice(g, 4);
  const FilterSequence H = ont_filter(g, lat, symbol(lat, 256, 256), 32);
  const CheckOutcome r1 = check_r1(H, 4, 1e-6);
  CHECK(r1.pass);
  CHECK(r1.value <= 1e-6);
}

TEST_CASE("zero seed is singular") {
  const OverlapLattice lat = lattice(seed_preset("zero"), 4);
  CHECK_THROWS_AS(f_coefficients(symbol(lat, 32, 32)), SingularSymbol);
  CHECK_THROWS_AS(ont_filter(seed_preset("zero"), lat, symbol(lat, 32, 32), 8), SingularSymbol);
}

TEST_CASE("orthonormalized seed passes the lattice check") {
  const SeedFunction g = seed_preset("gaussian");
  const OverlapLattice lat = lattice(g, 4);
  const FCoefficients fc = f_coefficients(symbol(lat, 128, 128));
  const SeedFunction t = ont_seed(g, fc);
  CHECK(!t.is_symbolic());
  const OncResult onc = check_onc(lattice(t, 2), 1e-4);
  CHECK(onc.pass);
  CHECK(onc.residual <= 1e-4);
}

TEST_CASE("coefficient route matches the direct route") {
  // A frequency-domain seed forces the convolution route; its output must
  // agree with the direct integrals of the equivalent position-domain seed.
  const SeedFunction pos = seed_preset("e1");
  const SeedFunction frq = seed_preset("row7");

  const OverlapLattice lat_pos = lattice(pos, 8);
  const OverlapLattice lat_frq = lattice(frq, 8);
  const FilterSequence direct = ont_filter(pos, lat_pos, symbol(lat_pos, 64, 64), 12);
  const FilterSequence routed = ont_filter(frq, lat_frq, symbol(lat_frq, 64, 64), 12);

  // e1 carries row7's profile in position space; both are orthonormal, so
  // both orthonormalizations are identities onto their own coefficients.
  const FilterSequence base_pos = extract_filter(pos, 12);
  const FilterSequence base_frq = extract_filter(frq, 12);
  double err_pos = 0.0, err_frq = 0.0;
  for (int n = -12; n <= 12; ++n) {
    err_pos = std::max(err_pos, std::abs(direct.at(n) - base_pos.at(n)));
    err_frq = std::max(err_frq, std::abs(routed.at(n) - base_frq.at(n)));
  }
  CHECK(err_pos <= 1e-10);
  CHECK(err_frq <= 1e-10);
}
