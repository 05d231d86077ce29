#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "seedmra/cascade.hpp"
#include "seedmra/errors.hpp"
#include "seedmra/filter.hpp"
#include "seedmra/presets.hpp"
#include "test_helpers.hpp"

using namespace seedmra;
using seedmra::testing::check_close;

TEST_CASE("haar filter reproduces the indicator exactly") {
  const FilterSequence f = extract_filter(seed_preset("haar"), 8);
  const CascadeResult res = cascade_scaling(f, 12, 10);
  CHECK(res.residual == 0.0);
  CHECK(res.index_shift == -1);
  CHECK(res.phi.x_min == doctest::Approx(-1.0));
  CHECK(res.phi.x_max == doctest::Approx(0.0));

  // Every interior sample is exactly 1, the right edge exactly 0.
  const std::size_t count = res.phi.values.size();
  for (std::size_t i = 0; i + 1 < count; ++i) {
    CHECK(res.phi.values[i].real() == 1.0);
    CHECK(res.phi.values[i].imag() == 0.0);
  }
  CHECK(std::abs(res.phi.values[count - 1]) == 0.0);

  check_close(sampled_integral(res.phi), {1.0, 0.0}, 0.0);
  CHECK(sampled_l2_norm_sq(res.phi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(refinement_residual(f, res.phi) == 0.0);

  const TranslateCheck tr = check_translate_orthonormality(res.phi, 3, 1e-10);
  CHECK(tr.pass);
  CHECK(tr.residual == 0.0);
}

TEST_CASE("haar wavelet is the two-step profile") {
  const FilterSequence f = extract_filter(seed_preset("haar"), 8);
  const CascadeResult res = cascade_scaling(f, 12, 10);
  const SampledFunction psi = mother_wavelet(f, res.phi);

  CHECK(psi.x_min == doctest::Approx(-1.0));
  CHECK(psi.x_max == doctest::Approx(0.0));
  const double step = psi.step();
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    const double x = psi.x_min + static_cast<double>(i) * step;
    double want = 0.0;
    if (x >= -0.5 && x < 0.0) want = 1.0;
    else if (x >= -1.0 && x < -0.5) want = -1.0;
    CAPTURE(x);
    CHECK(std::abs(psi.values[i] - complexd{want, 0.0}) <= 1e-12);
  }

  check_close(sampled_integral(psi), {0.0, 0.0}, 1e-12);
  CHECK(sampled_l2_norm_sq(psi) == doctest::Approx(1.0).epsilon(1e-12));

  const TranslateCheck tr = check_translate_orthonormality(psi, 3, 1e-10);
  CHECK(tr.pass);
  for (int k = -3; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(std::abs(inner_translate(psi, res.phi, k)) <= 1e-10);
  }
}

TEST_CASE("delta filter contracts mass at the control rate") {
  // One tap at n = 0: each iteration squeezes the iterate by two and scales
  // by sqrt2, so sup grows as 2^{t/2} while the integral decays as 2^{-t/2}.
  const FilterSequence f = FilterSequence::manual(0, {{1.0, 0.0}});
  const CascadeResult res = cascade_scaling(f, 6, 6);
  double sup = 0.0;
  for (const complexd& v : res.phi.values) sup = std::max(sup, std::abs(v));
  CHECK(sup == doctest::Approx(8.0).epsilon(1e-12));
  check_close(sampled_integral(res.phi), {0.125, 0.0}, 1e-12);
}

TEST_CASE("oversized taps diverge") {
  const FilterSequence f = FilterSequence::manual(0, {{3.0, 0.0}, {3.0, 0.0}});
  CHECK_THROWS_AS(cascade_scaling(f, 20, 6), Diverged);
}

TEST_CASE("truncated extraction windows are refused") {
  const FilterSequence f = extract_filter(seed_preset("row3"), 64);
  CHECK(f.truncated_tail);
  CHECK_THROWS_AS(cascade_scaling(f, 4, 6), std::invalid_argument);
}

TEST_CASE("two-band filter runs to a finite profile") {
  const FilterSequence f = trimmed(extract_filter(seed_preset("row7"), 16));
  // While iterations <= level every iterate is piecewise constant on dyadic
  // panels the grid still resolves, so the left-rectangle mass is exact. The
  // coefficient sum is 1, not sqrt2, so each pass sheds a factor 1/sqrt2.
  const CascadeResult exact = cascade_scaling(f, 6, 8);
  CHECK(exact.phi.x_min == doctest::Approx(-5.0));
  CHECK(exact.phi.x_max == doctest::Approx(0.0));
  CHECK(std::abs(sampled_integral(exact.phi)) ==
        doctest::Approx(std::ldexp(1.0, -3)).epsilon(1e-12));
  // Past the grid resolution the samples alias but must stay bounded.
  const CascadeResult res = cascade_scaling(f, 12, 8);
  double sup = 0.0;
  for (const complexd& v : res.phi.values) sup = std::max(sup, std::abs(v));
  CHECK(sup < 1e6);
  CHECK(std::isfinite(res.residual));
}

TEST_CASE("translate inner products demand aligned grids") {
  const FilterSequence f = extract_filter(seed_preset("haar"), 8);
  const SampledFunction a = cascade_scaling(f, 6, 8).phi;
  SampledFunction b = a;
  b.level = 7;
  CHECK_THROWS_AS(inner_translate(a, b, 0), std::invalid_argument);
  b = a;
  b.x_min += 0.3;
  b.x_max += 0.3;
  CHECK_THROWS_AS(inner_translate(a, b, 0), std::invalid_argument);
}

TEST_CASE("orthonormality check rejects degenerate ranges") {
  const FilterSequence f = extract_filter(seed_preset("haar"), 8);
  const SampledFunction phi = cascade_scaling(f, 6, 8).phi;
  CHECK_THROWS_AS(check_translate_orthonormality(phi, 0), std::invalid_argument);
}

TEST_CASE("csv emission") {
  const FilterSequence f = extract_filter(seed_preset("haar"), 8);
  const SampledFunction phi = cascade_scaling(f, 4, 3).phi;
  const std::string csv = sampled_csv(phi);
  CHECK(csv.rfind("x,re,im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 9);
}
