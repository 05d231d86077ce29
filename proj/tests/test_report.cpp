#include <string>

#include "doctest.h"
#include "json.hpp"
#include "seedmra/cascade.hpp"
#include "seedmra/filter.hpp"
#include "seedmra/ortho.hpp"
#include "seedmra/overlap.hpp"
#include "seedmra/presets.hpp"
#include "seedmra/report.hpp"

using namespace seedmra;
using nlohmann::json;

namespace {

OverlapLattice lattice(const SeedFunction& s, int L) {
  LatticeParams params;
  params.L = L;
  return overlap_lattice(s, params);
}

}  // namespace

TEST_CASE("relevance report structure") {
  const SeedFunction s = seed_preset("haar");
  const FilterSequence f = extract_filter(s, 16);
  const RelevanceReport rep = relevance_report(f, &s);
  const json j = json::parse(relevance_json(rep, f, "a note"));

  CHECK(j["filter"]["n_min"] == -16);
  CHECK(j["filter"]["provenance"] == "extracted");
  CHECK(j["r1"]["pass"] == true);
  CHECK(j["r3"]["pass"] == true);
  CHECK(j["r4"]["min_abs"].get<double>() > 0.7);
  CHECK(j["seed_conditions"]["vi2"]["abs_diff"].get<double>() <= 1e-10);
  CHECK(j["tolerances"]["r4_grid"] == 4096);
  CHECK(j["note"] == "a note");

  const json bare = json::parse(relevance_json(relevance_report(f), f));
  CHECK(!bare.contains("seed_conditions"));
  CHECK(!bare.contains("note"));
}

TEST_CASE("lattice report with and without a sigma verdict") {
  const OverlapLattice lat = lattice(seed_preset("haar"), 4);
  const OncResult onc = check_onc(lat);
  const MoncResult monc = check_monc(lat);

  json j = json::parse(lattice_json(lat, onc, monc, ""));
  CHECK(j["onc"]["pass"] == true);
  CHECK(j["monc"]["sigma"].get<double>() == doctest::Approx(1.0));

  j = json::parse(lattice_json(lat, onc, std::nullopt, "NonSummable: tail"));
  CHECK(j["monc"]["pass"] == false);
  CHECK(j["monc"]["error"] == "NonSummable: tail");
}

TEST_CASE("coefficient report keeps grid provenance and drops zeros") {
  const OverlapLattice lat = lattice(seed_preset("haar"), 4);
  const SymbolGrid sym = symbol(lat, 32, 32);
  const json j = json::parse(f_coefficients_json(sym, f_coefficients(sym)));
  CHECK(j["symbol"]["n1"] == 32);
  CHECK(j["symbol"]["max_imag"].get<double>() <= 1e-12);
  CHECK(j["f"]["f00"]["re"].get<double>() == doctest::Approx(1.0));
  // The flat symbol keeps only the constant coefficient.
  CHECK(j["f"]["entries"].size() == 1);
}

TEST_CASE("cascade report carries both profiles and a verdict") {
  const FilterSequence f = extract_filter(seed_preset("haar"), 8);
  const CascadeResult res = cascade_scaling(f, 8, 6);
  const SampledFunction psi = mother_wavelet(f, res.phi);
  const json j = json::parse(cascade_json(f, res, psi, 3, 1e-10, 8));
  CHECK(j["iterations"] == 8);
  CHECK(j["phi"]["mass"]["re"].get<double>() == doctest::Approx(1.0));
  CHECK(j["phi"]["translate"]["pass"] == true);
  CHECK(j["psi"]["cross_max"].get<double>() <= 1e-10);
  CHECK(j["pass"] == true);
}

TEST_CASE("crosscheck report and csv") {
  std::vector<std::pair<std::string, std::vector<OverlapEntry>>> models;
  OverlapEntry e;
  e.l1 = 1;
  e.l2 = 0;
  e.value = {0.043, 0.0};
  e.oracle_abs = 0.0432;
  e.abs_error = 2e-4;
  models.emplace_back("example2", std::vector<OverlapEntry>{e});

  QuadSpec quad;
  const json j = json::parse(crosscheck_json(models, quad, 1e-4));
  CHECK(j["models"][0]["model"] == "example2");
  CHECK(j["models"][0]["pass"] == false);
  CHECK(j["pass"] == false);
  CHECK(j["tolerance"].get<double>() == doctest::Approx(1e-4));

  const std::string csv = crosscheck_csv(models);
  CHECK(csv.rfind("model,l1,l2,re,im,abs,oracle_abs,abs_error\n", 0) == 0);
  CHECK(csv.find("example2,1,0,") != std::string::npos);
}
