#pragma once

// JSON report builders for the command line tool.  Key order is fixed and
// numbers are dumped with shortest round-trip precision, so identical inputs
// produce byte-identical reports.  Every report embeds the tolerances and
// grid sizes that produced it.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seedmra/cascade.hpp"
#include "seedmra/filter.hpp"
#include "seedmra/ortho.hpp"
#include "seedmra/overlap.hpp"
#include "seedmra/qmcheck.hpp"

namespace seedmra {

// r1..r4 verdicts, optional seed-level identities, filter metadata.
std::string relevance_json(const RelevanceReport& rep, const FilterSequence& f,
                           const std::string& note = "");

// Lattice metadata plus ONC/MONC verdicts; monc_error carries the reason when
// the MONC check refused the lattice (non-summable tail).
std::string lattice_json(const OverlapLattice& lat, const OncResult& onc,
                         const std::optional<MoncResult>& monc, const std::string& monc_error);

// Symbol statistics and the f-coefficient table.
std::string f_coefficients_json(const SymbolGrid& sym, const FCoefficients& fc);

// Scaling/wavelet diagnostics: residuals, masses, orthonormality outcomes.
std::string cascade_json(const FilterSequence& f, const CascadeResult& cascade,
                         const SampledFunction& psi, int k_max, double tol, int iterations);

// Per-model overlap tables against the lattice oracle.
std::string crosscheck_json(
    const std::vector<std::pair<std::string, std::vector<OverlapEntry>>>& models,
    const QuadSpec& quad, double tol);

// The same table flattened to CSV: "model,l1,l2,re,im,abs,oracle_abs,abs_error".
std::string crosscheck_csv(
    const std::vector<std::pair<std::string, std::vector<OverlapEntry>>>& models);

}  // namespace seedmra
