#include "seedmra/report.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "json.hpp"

namespace seedmra {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json complex_obj(const complexd& z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json check_obj(const CheckOutcome& c, const char* value_key) {
  ordered_json j;
  j["pass"] = c.pass;
  j[value_key] = c.value;
  return j;
}

const char* provenance_name(FilterSequence::Provenance p) {
  switch (p) {
    case FilterSequence::Provenance::Extracted: return "extracted";
    case FilterSequence::Provenance::Orthonormalized: return "orthonormalized";
    default: return "manual";
  }
}

ordered_json filter_obj(const FilterSequence& f) {
  ordered_json j;
  j["n_min"] = f.n_min;
  j["n_max"] = f.n_max;
  j["size"] = f.size();
  j["provenance"] = provenance_name(f.provenance);
  j["truncated_tail"] = f.truncated_tail;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string relevance_json(const RelevanceReport& rep, const FilterSequence& f,
                           const std::string& note) {
  ordered_json j;
  j["filter"] = filter_obj(f);
  j["r1"] = check_obj(rep.r1, "residual");
  j["r2"] = check_obj(rep.r2, "sup_weighted");
  j["r3"] = check_obj(rep.r3, "deviation");
  j["r4"] = check_obj(rep.r4, "min_abs");
  if (rep.seed) {
    const SeedConditionValues& s = *rep.seed;
    ordered_json sc;
    sc["vi1"] = ordered_json{{"lhs", complex_obj(s.vi1_lhs)},
                             {"rhs", complex_obj(s.vi1_rhs)},
                             {"abs_diff", std::abs(s.vi1_lhs - s.vi1_rhs)}};
    sc["vi2"] = ordered_json{{"lhs", complex_obj(s.vi2_lhs)},
                             {"rhs", complex_obj(s.vi2_rhs)},
                             {"abs_diff", std::abs(s.vi2_lhs - s.vi2_rhs)}};
    sc["vi3_min"] = s.vi3_min;
    j["seed_conditions"] = sc;
  }
  ordered_json tols;
  tols["r1"] = rep.tols.r1;
  tols["r1_l_max"] = rep.tols.r1_lmax;
  tols["r3"] = rep.tols.r3;
  tols["r4_delta"] = rep.tols.r4_delta;
  tols["r4_grid"] = rep.tols.r4_grid;
  tols["vi_trunc"] = rep.tols.vi_trunc;
  tols["vi3_points"] = rep.tols.vi3_points;
  j["tolerances"] = tols;
  if (!note.empty()) j["note"] = note;
  return dump(j);
}

std::string lattice_json(const OverlapLattice& lat, const OncResult& onc,
                         const std::optional<MoncResult>& monc, const std::string& monc_error) {
  ordered_json j;
  j["lattice"] = ordered_json{{"a", lat.params.a}, {"L", lat.params.L}};
  j["onc"] = ordered_json{{"pass", onc.pass}, {"residual", onc.residual}};
  if (monc) {
    j["monc"] = ordered_json{{"pass", monc->pass}, {"sigma", monc->sigma}};
  } else {
    j["monc"] = ordered_json{{"pass", false}, {"error", monc_error}};
  }
  return dump(j);
}

std::string f_coefficients_json(const SymbolGrid& sym, const FCoefficients& fc) {
  ordered_json j;
  ordered_json sj;
  sj["n1"] = sym.n1;
  sj["n2"] = sym.n2;
  sj["L"] = sym.L;
  sj["min_real"] = sym.min_real;
  sj["max_real"] = sym.max_real;
  sj["max_imag"] = sym.max_imag;
  j["symbol"] = sj;
  ordered_json cj;
  cj["L"] = fc.L;
  cj["f00"] = complex_obj(fc.at(0, 0));
  ordered_json entries = ordered_json::array();
  for (int m1 = -fc.L; m1 <= fc.L; ++m1) {
    for (int m2 = -fc.L; m2 <= fc.L; ++m2) {
      const complexd v = fc.at(m1, m2);
      if (std::abs(v) <= 1e-14) continue;
      entries.push_back(ordered_json{
          {"m1", m1}, {"m2", m2}, {"re", v.real()}, {"im", v.imag()}});
    }
  }
  cj["entries"] = entries;
  j["f"] = cj;
  return dump(j);
}

std::string cascade_json(const FilterSequence& f, const CascadeResult& cascade,
                         const SampledFunction& psi, int k_max, double tol, int iterations) {
  const SampledFunction& phi = cascade.phi;
  const TranslateCheck phi_tr = check_translate_orthonormality(phi, k_max, tol);
  const TranslateCheck psi_tr = check_translate_orthonormality(psi, k_max, tol);

  // Largest mixing of the wavelet with integer translates of the scaling
  // function; zero for an orthonormal pair.
  double cross_max = 0.0;
  for (int k = -k_max; k <= k_max; ++k) {
    cross_max = std::max(cross_max, std::abs(inner_translate(psi, phi, k)));
  }

  ordered_json j;
  j["filter"] = filter_obj(f);
  j["iterations"] = iterations;
  ordered_json pj;
  pj["x_min"] = phi.x_min;
  pj["x_max"] = phi.x_max;
  pj["level"] = phi.level;
  pj["index_shift"] = cascade.index_shift;
  pj["residual"] = cascade.residual;
  pj["mass"] = complex_obj(sampled_integral(phi));
  pj["l2_norm_sq"] = sampled_l2_norm_sq(phi);
  pj["translate"] = ordered_json{{"pass", phi_tr.pass}, {"residual", phi_tr.residual}};
  j["phi"] = pj;
  ordered_json wj;
  wj["x_min"] = psi.x_min;
  wj["x_max"] = psi.x_max;
  wj["level"] = psi.level;
  wj["mass"] = complex_obj(sampled_integral(psi));
  wj["l2_norm_sq"] = sampled_l2_norm_sq(psi);
  wj["translate"] = ordered_json{{"pass", psi_tr.pass}, {"residual", psi_tr.residual}};
  wj["cross_max"] = cross_max;
  j["psi"] = wj;
  j["tolerances"] = ordered_json{{"translate", tol}, {"k_max", k_max}};
  const bool pass = phi_tr.pass && psi_tr.pass && cross_max <= tol;
  j["pass"] = pass;
  return dump(j);
}

std::string crosscheck_json(
    const std::vector<std::pair<std::string, std::vector<OverlapEntry>>>& models,
    const QuadSpec& quad, double tol) {
  ordered_json j;
  j["quadrature"] = ordered_json{{"radius", quad.radius}, {"nodes", quad.nodes}};
  j["tolerance"] = tol;
  bool all_pass = true;
  ordered_json mj = ordered_json::array();
  for (const auto& [name, table] : models) {
    double max_err = 0.0;
    ordered_json entries = ordered_json::array();
    for (const OverlapEntry& e : table) {
      max_err = std::max(max_err, e.abs_error);
      entries.push_back(ordered_json{{"l1", e.l1},
                                     {"l2", e.l2},
                                     {"re", e.value.real()},
                                     {"im", e.value.imag()},
                                     {"abs", std::abs(e.value)},
                                     {"oracle_abs", e.oracle_abs},
                                     {"abs_error", e.abs_error}});
    }
    const bool pass = max_err <= tol;
    all_pass = all_pass && pass;
    mj.push_back(ordered_json{{"model", name},
                              {"max_abs_error", max_err},
                              {"pass", pass},
                              {"entries", entries}});
  }
  j["models"] = mj;
  j["pass"] = all_pass;
  return dump(j);
}

std::string crosscheck_csv(
    const std::vector<std::pair<std::string, std::vector<OverlapEntry>>>& models) {
  std::string out = "model,l1,l2,re,im,abs,oracle_abs,abs_error\n";
  char buf[196];
  for (const auto& [name, table] : models) {
    for (const OverlapEntry& e : table) {
      std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", name.c_str(),
                    e.l1, e.l2, e.value.real(), e.value.imag(), std::abs(e.value), e.oracle_abs,
                    e.abs_error);
      out += buf;
    }
  }
  return out;
}

}  // namespace seedmra
