// Acceptance gate: nine numbered criteria, one verdict line each.  Every
// tolerance is pinned here, next to the check it guards.  The process exits
// nonzero if any criterion fails, so the gate can sit in CI unchanged.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "seedmra/cascade.hpp"
#include "seedmra/filter.hpp"
#include "seedmra/ortho.hpp"
#include "seedmra/overlap.hpp"
#include "seedmra/presets.hpp"
#include "seedmra/qmcheck.hpp"
#include "seedmra/seed.hpp"

using namespace seedmra;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

OverlapLattice lattice(const SeedFunction& s, int L) {
  LatticeParams params;
  params.L = L;
  return overlap_lattice(s, params);
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Closed forms for the printed coefficient table.
complexd table_coeff(const std::string& row, int n) {
  const double r = 1.0 / std::sqrt(2.0);
  if (row == "row1") return n == 0 ? complexd{1.0, 0.0} : complexd{0.0, 0.0};
  if (row == "row2") {
    const complexd num = complexd{0.0, 1.0} * (1.0 - std::polar(1.0, -kCellWidth));
    return num / (2.0 * kPi * n - kCellWidth);
  }
  if (row == "row3") {
    if (n == 0) return {r, 0.0};
    if (n % 2 == 0) return {0.0, 0.0};
    return {0.0, std::sqrt(2.0) / (kPi * n)};
  }
  if (row == "row4") {
    if (n == 0) return {r, 0.0};
    if (n % 2 == 0) return {0.0, 0.0};
    return {0.0, -std::sqrt(2.0) / (kPi * n)};
  }
  if (row == "row5") return (n == 0 || n == -1) ? complexd{r, 0.0} : complexd{0.0, 0.0};
  if (row == "row6") return n == 0 ? complexd{1.0, 0.0} : complexd{0.0, 0.0};
  if (row == "row7") {
    if (n == 0 || n == -4 || n == -5) return {0.5, 0.0};
    if (n == -1) return {-0.5, 0.0};
    return {0.0, 0.0};
  }
  if (row == "row8") {
    if (n == 0 || n == -2 || n == -3) return {0.5, 0.0};
    if (n == -1) return {-0.5, 0.0};
    return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

double table_error(const std::string& preset, const std::string& row) {
  const FilterSequence f = extract_filter(seed_preset(preset), 64);
  double err = 0.0;
  for (int n = -64; n <= 64; ++n) err = std::max(err, std::abs(f.at(n) - table_coeff(row, n)));
  return err;
}

Verdict criterion1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<const char*, const char*> rows[] = {
      {"row1", "row1"},           {"row2_corrected", "row2"}, {"row3", "row3"},
      {"row4", "row4"},           {"row5", "row5"},           {"row6_corrected", "row6"},
      {"row7", "row7"},           {"row8", "row8"}};
  double worst = 0.0;
  for (const auto& [preset, row] : rows) {
    const double err = table_error(preset, row);
    worst = std::max(worst, err);
    v.require(err <= 1e-12, std::string(preset) + " err " + fmt(err));
  }
  // The literal variants do not reproduce the printed tails; the catalogue
  // documents the discrepancy instead of hiding it.
  v.require(std::abs(extract_filter(seed_preset("row2_literal"), 8).at(0) -
                     std::polar(1.0, -kCellWidth)) <= 1e-12,
            "row2_literal is not the phased delta");
  v.require(!preset_note("row2_literal").empty(), "row2_literal lacks its note");
  v.require(!preset_note("row6_literal").empty(), "row6_literal lacks its note");
  const double dt = seconds_since(t0);
  v.require(dt < 1.0, "runtime " + fmt(dt) + "s");
  v.note("max err " + fmt(worst) + ", " + fmt(dt) + "s");
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const char* name : {"row1", "row2_corrected", "row3", "row4", "row5", "row6_corrected",
                           "row7", "row8"}) {
    const OncResult onc = check_onc(lattice(seed_preset(name), 8), 1e-12);
    worst = std::max(worst, onc.residual);
    v.require(onc.pass && onc.residual <= 1e-12, std::string(name) + " residual " +
                                                      fmt(onc.residual));
  }
  const double dt = seconds_since(t0);
  v.require(dt < 1.0, "runtime " + fmt(dt) + "s");
  v.note("max residual " + fmt(worst) + ", " + fmt(dt) + "s");
  return v;
}

Verdict criterion3() {
  Verdict v;
  double worst_finite = 0.0;
  for (const char* name : {"row1", "row2_literal", "row5", "row6_corrected", "row7", "row8"}) {
    const CheckOutcome r1 = check_r1(extract_filter(seed_preset(name), 64), 8, 1e-14);
    worst_finite = std::max(worst_finite, r1.value);
    v.require(r1.pass, std::string(name) + " residual " + fmt(r1.value));
  }
  double worst_tail = 0.0;
  for (const char* name : {"row3", "row4"}) {
    const CheckOutcome r1 = check_r1(extract_filter(seed_preset(name), 10000), 8, 2e-4);
    worst_tail = std::max(worst_tail, r1.value);
    v.require(r1.pass, std::string(name) + " wide-window residual " + fmt(r1.value));
  }
  v.note("finite " + fmt(worst_finite) + ", tails " + fmt(worst_tail));
  return v;
}

Verdict criterion4() {
  Verdict v;
  const CheckOutcome r3 = check_r3(extract_filter(seed_preset("row6_corrected"), 64), 1e-12);
  v.require(!r3.pass, "row6_corrected unexpectedly passes the sum condition");
  v.require(std::fabs(r3.value - (std::sqrt(2.0) - 1.0)) <= 1e-12,
            "row6_corrected deviation " + fmt(r3.value));

  const FilterSequence haar = extract_filter(seed_preset("haar"), 64);
  const CheckOutcome h1 = check_r1(haar, 8, 1e-12);
  const CheckOutcome h2 = check_r2(haar);
  const CheckOutcome h3 = check_r3(haar, 1e-12);
  const CheckOutcome h4 = check_r4(haar, 4096, 1e-6);
  v.require(h1.pass && h2.pass && h3.pass && h4.pass, "haar fails a relevance check");
  v.require(h3.value <= 1e-12, "haar sum deviation " + fmt(h3.value));
  v.require(std::fabs(h4.value - 1.0 / std::sqrt(2.0)) <= 1e-9,
            "haar transfer minimum " + fmt(h4.value));
  v.note("row6 dev " + fmt(r3.value) + ", haar min " + fmt(h4.value));
  return v;
}

Verdict criterion5() {
  Verdict v;
  const SeedConditionValues c = seed_conditions(seed_preset("haar"), 257, 8);
  const double vi2 = std::abs(c.vi2_lhs - c.vi2_rhs);
  v.require(vi2 <= 1e-10, "haar frequency identity gap " + fmt(vi2));

  const SeedFunction row4 = seed_preset("row4");
  complexd sum{0.0, 0.0};
  for (int n = -8; n <= 8; ++n) sum += row4.eval_at_rational(Rational(n));
  v.require(sum == complexd{0.0, 0.0}, "row4 integer samples sum to " + fmt(std::abs(sum)));
  v.note("vi2 gap " + fmt(vi2) + ", row4 sum exact zero");
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();

  // (a) Orthonormal input: the map is the identity.
  {
    const SeedFunction s = seed_preset("haar");
    const OverlapLattice lat = lattice(s, 8);
    const FilterSequence H = ont_filter(s, lat, symbol(lat, 64, 64), 32);
    const FilterSequence h = extract_filter(s, 32);
    double err = 0.0;
    for (int n = -32; n <= 32; ++n) err = std::max(err, std::abs(H.at(n) - h.at(n)));
    v.require(err <= 1e-10, "identity gap " + fmt(err));
    v.note("identity " + fmt(err));
  }

  // (b) Modified condition with sigma = 4: coefficients divide by 2.
  {
    const SeedFunction s = seed_preset("row3").scaled({2.0, 0.0});
    const OverlapLattice lat = lattice(s, 8);
    const MoncResult monc = check_monc(lat, 1e-10);
    v.require(monc.pass && std::fabs(monc.sigma - 4.0) <= 1e-10,
              "sigma " + fmt(monc.sigma));
    const FilterSequence H = ont_filter(s, lat, symbol(lat, 64, 64), 32);
    const FilterSequence h = extract_filter(s, 32);
    double err = 0.0;
    for (int n = -32; n <= 32; ++n)
      err = std::max(err, std::abs(H.at(n) - h.at(n) / std::sqrt(monc.sigma)));
    v.require(err <= 1e-8, "sigma-scaling gap " + fmt(err));
    v.note("sigma gap " + fmt(err));
  }

  // (c) Gaussian input: the output satisfies the lattice identity.
  {
    const SeedFunction g = seed_preset("gaussian");
    const OverlapLattice lat = lattice(g, 4);
    const FilterSequence H = ont_filter(g, lat, symbol(lat, 256, 256), 32);
    const CheckOutcome r1 = check_r1(H, 4, 1e-6);
    v.require(r1.pass && r1.value <= 1e-6, "gaussian residual " + fmt(r1.value));
    v.note("gaussian r1 " + fmt(r1.value));
  }

  const double dt = seconds_since(t0);
  v.require(dt < 30.0, "runtime " + fmt(dt) + "s");
  v.note(fmt(dt) + "s");
  return v;
}

Verdict criterion7() {
  Verdict v;
  const FilterSequence f = extract_filter(seed_preset("haar"), 16);
  const CascadeResult res = cascade_scaling(f, 12, 10);
  v.require(res.residual <= 1e-12, "cascade residual " + fmt(res.residual));
  const double refine = refinement_residual(f, res.phi);
  v.require(refine <= 1e-12, "refinement residual " + fmt(refine));
  const TranslateCheck tr = check_translate_orthonormality(res.phi, 4, 1e-10);
  v.require(tr.pass, "translate residual " + fmt(tr.residual));
  const complexd mass = sampled_integral(res.phi);
  v.require(std::abs(mass - complexd{1.0, 0.0}) <= 1e-10, "mass " + fmt(std::abs(mass)));

  const SampledFunction psi = mother_wavelet(f, res.phi);
  double wave_err = 0.0;
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    const double x = psi.x_min + static_cast<double>(i) * psi.step();
    double want = 0.0;
    if (x >= -0.5 && x < 0.0) want = 1.0;
    else if (x >= -1.0 && x < -0.5) want = -1.0;
    wave_err = std::max(wave_err, std::abs(psi.values[i] - complexd{want, 0.0}));
  }
  v.require(wave_err <= 1e-12, "wavelet profile error " + fmt(wave_err));
  double cross = 0.0;
  for (int k = -4; k <= 4; ++k) cross = std::max(cross, std::abs(inner_translate(psi, res.phi, k)));
  v.require(cross <= 1e-10, "wavelet-scaling mixing " + fmt(cross));
  const TranslateCheck wtr = check_translate_orthonormality(psi, 4, 1e-10);
  v.require(wtr.pass, "wavelet translate residual " + fmt(wtr.residual));
  v.note("profile err " + fmt(wave_err) + ", mixing " + fmt(cross));
  return v;
}

Verdict criterion8() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const SeedFunction g = seed_preset("gaussian");

  double worst = 0.0;
  for (KernelVariant variant :
       {KernelVariant::Example1, KernelVariant::Example2, KernelVariant::Example3}) {
    KernelModel m;
    m.variant = variant;
    for (int l1 = -2; l1 <= 2; ++l1) {
      for (int l2 = -2; l2 <= 2; ++l2) {
        const double got = std::abs(overlap2d(m, g, l1, l2));
        const double want = std::exp(-kPi * (l1 * l1 + l2 * l2));
        const double err = std::fabs(got - want);
        worst = std::max(worst, err);
        v.require(err <= 1e-4, "model " + std::to_string(static_cast<int>(variant) + 1) +
                                   " (" + std::to_string(l1) + "," + std::to_string(l2) +
                                   ") err " + fmt(err));
      }
    }
  }

  // Swapping the window state must not move the overlaps.
  {
    KernelModel m;
    m.variant = KernelVariant::Example2;
    m.phi0 = seed_preset("hermite1");
    double err = 0.0;
    for (const auto& [l1, l2] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
      const double got = std::abs(overlap2d(m, g, l1, l2));
      err = std::max(err, std::fabs(got - std::exp(-kPi * (l1 * l1 + l2 * l2))));
    }
    v.require(err <= 1e-4, "window-state dependence " + fmt(err));
    v.note("window swap err " + fmt(err));
  }

  const double dt = seconds_since(t0);
  v.require(dt < 60.0, "runtime " + fmt(dt) + "s");
  v.note("max err " + fmt(worst) + ", " + fmt(dt) + "s");
  return v;
}

Verdict criterion9() {
  Verdict v;

  // Reflection symmetry: residuals match bit for bit.
  for (const char* name : {"row3", "row7", "gaussian"}) {
    const FilterSequence f = extract_filter(seed_preset(name), 64);
    const double a = check_r1(f, 8, 1e-10).value;
    const double b = check_r1(reflect(f), 8, 1e-10).value;
    v.require(a == b, std::string(name) + " reflection moved the residual");
  }

  // Coefficient mass equals seed mass on cell-supported data.
  auto mass = [](const FilterSequence& f) {
    double s = 0.0;
    for (int n = f.n_min; n <= f.n_max; ++n) s += std::norm(f.at(n));
    return s;
  };
  for (const char* name : {"row1", "row5", "row6_corrected", "row6_literal"}) {
    const double gap =
        std::fabs(mass(extract_filter(seed_preset(name), 64)) - seed_preset(name).l2_norm_sq());
    v.require(gap <= 1e-10, std::string(name) + " mass gap " + fmt(gap));
  }
  for (const char* name : {"row3", "row4"}) {
    const double gap = std::fabs(mass(extract_filter(seed_preset(name), 10000)) -
                                 seed_preset(name).l2_norm_sq());
    v.require(gap <= 2e-4, std::string(name) + " wide mass gap " + fmt(gap));
  }

  // The two domain forms of the overlap agree. Piecewise seeds route the
  // closure back onto exact segment data; the gaussian pair runs two
  // genuinely distinct closed forms.
  double dual = 0.0;
  for (const char* name : {"row1", "row3", "haar", "gaussian"}) {
    const SeedFunction s = seed_preset(name);
    const OverlapLattice a = lattice(s, 4);
    const OverlapLattice b = lattice(s.fourier(), 4);
    for (int l1 = -4; l1 <= 4; ++l1)
      for (int l2 = -4; l2 <= 4; ++l2)
        dual = std::max(dual, std::abs(a.at(l1, l2) - b.at(l1, l2)));
  }
  v.require(dual <= 1e-10, "domain forms disagree by " + fmt(dual));

  // Byte-identical tool reruns.
  {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "seedmra_acceptance_det";
    fs::remove_all(base);
    const fs::path a = base / "a", b = base / "b";
    fs::create_directories(a);
    fs::create_directories(b);
    const std::string cli = SEEDMRA_CLI_PATH;
    auto run = [&](const fs::path& dir) {
      const std::string cmd =
          cli + " analyze --seed preset:haar --out " + dir.string() + " >/dev/null 2>&1";
      return std::system(cmd.c_str());
    };
    const int rc1 = run(a), rc2 = run(b);
    v.require(rc1 != -1 && rc2 != -1 && WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0,
              "tool run failed");
    for (const char* name : {"overlap.csv", "filter.csv", "lattice.json", "relevance.json"}) {
      std::ifstream fa(a / name, std::ios::binary), fb(b / name, std::ios::binary);
      std::ostringstream sa, sb;
      sa << fa.rdbuf();
      sb << fb.rdbuf();
      v.require(fa.good() && fb.good() && sa.str() == sb.str(),
                std::string(name) + " differs between reruns");
    }
  }

  v.note("dual gap " + fmt(dual));
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"1 coefficient table", criterion1},
      {"2 lattice orthonormality", criterion2},
      {"3 orthonormality implies r1", criterion3},
      {"4 prose verdicts", criterion4},
      {"5 generator identities", criterion5},
      {"6 orthonormalization map", criterion6},
      {"7 cascade synthesis", criterion7},
      {"8 model independence", criterion8},
      {"9 property suite", criterion9},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %s: %s%s%s\n", name, v.pass ? "PASS" : "FAIL",
                v.detail.empty() ? "" : " :: ", v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
