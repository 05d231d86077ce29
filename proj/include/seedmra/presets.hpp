#pragma once

// Stock seeds used by the tests, docs and CLI (--seed preset:NAME).
//
// row1..row8 are the catalogue of closed-form ONC examples; their extracted
// coefficients are known exactly and the suite uses them as oracles.  Rows 2
// and 6 ship in two variants because the printed descriptions disagree with
// the printed coefficients: the *_literal presets follow the description
// verbatim, the *_corrected presets reproduce the coefficients.  Bare "row2"
// and "row6" are therefore rejected; callers must pick a variant.

#include <string>
#include <vector>

#include "seedmra/seed.hpp"

namespace seedmra {

// Throws std::invalid_argument for unknown names (message lists the options).
SeedFunction seed_preset(const std::string& name);

// Accepted names in catalogue order.
const std::vector<std::string>& preset_names();

// Non-empty for presets with a known quirk worth surfacing in reports
// (the *_literal variants, the position-domain twins e1/e2).
std::string preset_note(const std::string& name);

}  // namespace seedmra
