#include <cmath>
#include <complex>

#include "doctest.h"
#include "seedmra/errors.hpp"
#include "seedmra/presets.hpp"
#include "seedmra/qmcheck.hpp"
#include "test_helpers.hpp"

using namespace seedmra;
using seedmra::testing::check_close;

namespace {

KernelModel model_for(KernelVariant v) {
  KernelModel m;
  m.variant = v;
  return m;
}

}  // namespace

TEST_CASE("kernel phases") {
  const double x = 0.3, y = -0.7, s = 1.1, t = 0.2;
  const double inv = 1.0 / (2.0 * kPi);
  check_close(kernel(model_for(KernelVariant::Example1), x, y, s, t),
              std::polar(inv, x * t + y * s - s * t - x * y / 2.0), 1e-15);
  check_close(kernel(model_for(KernelVariant::Example2), x, y, s, t),
              std::polar(inv, x * (s - t) + y * t), 1e-15);
  check_close(kernel(model_for(KernelVariant::Example3), x, y, s, t),
              std::polar(inv, 0.5 * (x * x + 2.0 * (y * t - x * s) + s * s - t * t)), 1e-15);
}

TEST_CASE("first model wavefunction of the gaussian is a 2d gaussian") {
  // With both the window state and the seed gaussian the pair integral
  // collapses to (1/sqrt(2 pi)) e^{-(x^2+y^2)/4}, phase free.
  const KernelModel m = model_for(KernelVariant::Example1);
  const SeedFunction g = seed_preset("gaussian");
  for (const auto& [x, y] : {std::pair{0.0, 0.0}, {0.35, -1.2}, {1.7, 0.4}}) {
    CAPTURE(x);
    CAPTURE(y);
    const double want = std::exp(-(x * x + y * y) / 4.0) / std::sqrt(2.0 * kPi);
    check_close(wavefunction(m, g, x, y), {want, 0.0}, 1e-10);
  }
}

TEST_CASE("second model wavefunction factorizes exactly") {
  const KernelModel m = model_for(KernelVariant::Example2);
  const SeedFunction g = seed_preset("gaussian");
  for (const auto& [x, y] : {std::pair{0.2, 0.9}, {-1.1, 0.3}}) {
    const double want =
        std::pow(kPi, -0.5) * std::exp(-x * x / 2.0) * std::exp(-(x - y) * (x - y) / 2.0);
    check_close(wavefunction(m, g, x, y), {want, 0.0}, 1e-12);
  }
}

TEST_CASE("reduced forms agree with the direct double integral") {
  const SeedFunction g = seed_preset("gaussian");
  for (KernelVariant v :
       {KernelVariant::Example1, KernelVariant::Example2, KernelVariant::Example3}) {
    CAPTURE(static_cast<int>(v));
    const KernelModel m = model_for(v);
    for (const auto& [x, y] : {std::pair{0.4, -0.3}, {1.2, 0.8}}) {
      const complexd fast = wavefunction(m, g, x, y);
      const complexd direct = wavefunction_direct(m, g, x, y);
      check_close(fast, direct, 1e-6);
    }
  }
}

TEST_CASE("overlaps reproduce the gaussian lattice law") {
  const SeedFunction g = seed_preset("gaussian");

  SUBCASE("second model, machine accuracy") {
    const KernelModel m = model_for(KernelVariant::Example2);
    CHECK(std::abs(overlap2d(m, g, 0, 0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(overlap2d(m, g, 1, 0)) ==
          doctest::Approx(std::exp(-kPi)).epsilon(1e-8));
    CHECK(std::abs(overlap2d(m, g, 1, 1)) ==
          doctest::Approx(std::exp(-2.0 * kPi)).epsilon(1e-8));
  }

  SUBCASE("third model") {
    const KernelModel m = model_for(KernelVariant::Example3);
    CHECK(std::abs(overlap2d(m, g, 1, 0)) ==
          doctest::Approx(std::exp(-kPi)).epsilon(1e-6));
    CHECK(std::abs(overlap2d(m, g, 0, 2)) ==
          doctest::Approx(std::exp(-4.0 * kPi)).epsilon(1e-4));
  }

  SUBCASE("first model") {
    const KernelModel m = model_for(KernelVariant::Example1);
    CHECK(std::abs(overlap2d(m, g, 0, 0)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(overlap2d(m, g, 1, 1)) ==
          doctest::Approx(std::exp(-2.0 * kPi)).epsilon(1e-8));
  }
}

TEST_CASE("window state does not change the overlaps") {
  // Swapping the gaussian window for the first Hermite function leaves the
  // lattice law intact: the overlaps are properties of the seed alone.
  KernelModel m = model_for(KernelVariant::Example2);
  m.phi0 = seed_preset("hermite1");
  const SeedFunction g = seed_preset("gaussian");
  CHECK(std::abs(overlap2d(m, g, 0, 0)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(overlap2d(m, g, 1, 0)) == doctest::Approx(std::exp(-kPi)).epsilon(1e-6));
}

TEST_CASE("translation action matches a recomputed wavefunction") {
  const KernelModel m = model_for(KernelVariant::Example2);
  const SeedFunction g = seed_preset("gaussian");
  WaveEvaluator base = [&](double x, double y) { return wavefunction(m, g, x, y); };
  const WaveEvaluator moved = translate_wavefunction(m, base, 1, -1);
  // The magnetic translation shifts the second argument by a*l1; the phase
  // is gauge, so compare magnitudes.
  const double x = 0.6, y = -0.2;
  CHECK(std::abs(moved(x, y)) ==
        doctest::Approx(std::abs(wavefunction(m, g, x, y + kCellWidth))).epsilon(1e-10));
}

TEST_CASE("overlap tables carry oracle errors") {
  const KernelModel m = model_for(KernelVariant::Example2);
  const std::vector<OverlapEntry> table = overlap_table(m, seed_preset("gaussian"), 1);
  CHECK(table.size() == 9);
  for (const OverlapEntry& e : table) {
    CAPTURE(e.l1);
    CAPTURE(e.l2);
    CHECK(e.abs_error <= 1e-6);
    CHECK(e.oracle_abs ==
          doctest::Approx(std::exp(-kPi * (e.l1 * e.l1 + e.l2 * e.l2))).epsilon(1e-10));
  }
}

TEST_CASE("single-entry table") {
  const std::vector<OverlapEntry> t =
      overlap_table(model_for(KernelVariant::Example2), seed_preset("gaussian"), 0);
  CHECK(t.size() == 1);
  CHECK(t[0].abs_error <= 1e-6);
}

TEST_CASE("slow seeds trip the boundary guard") {
  const KernelModel m = model_for(KernelVariant::Example2);
  CHECK_THROWS_AS(overlap2d(m, seed_preset("row1"), 0, 0), QuadratureDivergence);
}

TEST_CASE("validation") {
  KernelModel m = model_for(KernelVariant::Example1);
  m.phi0 = seed_preset("gaussian").scaled({2.0, 0.0});
  CHECK_THROWS_AS(overlap2d(m, seed_preset("gaussian"), 0, 0), std::invalid_argument);

  QuadSpec quad;
  quad.nodes = 1;
  CHECK_THROWS_AS(overlap2d(model_for(KernelVariant::Example2), seed_preset("gaussian"), 0, 0,
                            quad),
                  std::invalid_argument);
}
