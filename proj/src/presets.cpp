#include "seedmra/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace seedmra {

namespace {

Segment seg(Rational start, Rational end, complexd amp) {
  Segment s;
  s.start = start;
  s.end = end;
  s.amp = amp;
  return s;
}

Segment seg_mod(Rational start, Rational end, complexd amp, Rational mu_cells, double mu_rad) {
  Segment s = seg(start, end, amp);
  s.mu_cells = mu_cells;
  s.mu_rad = mu_rad;
  return s;
}

SeedFunction build(const std::string& name) {
  const double inv_root_a = 1.0 / std::sqrt(kCellWidth);        // 1/sqrt(a)
  const double half_amp = std::sqrt(2.0 / kCellWidth);          // sqrt(2/a), pi^{-1/4}
  const double twin_amp = 1.0 / std::sqrt(2.0 * kCellWidth);    // 1/sqrt(2a)
  const Rational r0(0), rh(1, 2), r1(1), r2(2), r3(3);

  if (name == "row1")
    return SeedFunction::piecewise(Domain::Position, {seg(r0, r1, inv_root_a)});
  if (name == "row2_literal")
    // Constant phase applied to the flat cell: coefficients collapse to
    // e^{-ia} delta_{n,0} instead of the printed tail.
    return SeedFunction::piecewise(Domain::Position,
                                   {seg(r0, r1, std::polar(inv_root_a, -kCellWidth))});
  if (name == "row2_corrected")
    // e^{-is}/sqrt(a) on one cell: reproduces i(1-e^{-ia})/(2 pi n - a).
    return SeedFunction::piecewise(Domain::Position,
                                   {seg_mod(r0, r1, inv_root_a, r0, -1.0)});
  if (name == "row3")
    return SeedFunction::piecewise(Domain::Position, {seg(r0, rh, half_amp)});
  if (name == "row4")
    return SeedFunction::piecewise(Domain::Position, {seg(rh, r1, half_amp)});
  if (name == "row5" || name == "haar")
    return SeedFunction::piecewise(Domain::Frequency, {seg(r0, r1, inv_root_a)});
  if (name == "row6_literal")
    // Norm 2, not 1: coefficients come out {1, 1} at n = 0, -1.
    return SeedFunction::piecewise(Domain::Frequency, {seg(r0, r1, half_amp)});
  if (name == "row6_corrected")
    // Half-cell support restores the unit norm and delta_{n,0}.
    return SeedFunction::piecewise(Domain::Frequency, {seg(r0, rh, half_amp)});
  if (name == "row7")
    return SeedFunction::piecewise(Domain::Frequency, {seg(r0, rh, twin_amp),
                                                       seg(rh, r1, -twin_amp),
                                                       seg(r2, r3, twin_amp)});
  if (name == "row8")
    return SeedFunction::piecewise(Domain::Frequency, {seg(r0, rh, twin_amp),
                                                       seg(rh, r1, -twin_amp),
                                                       seg(r1, r2, twin_amp)});
  if (name == "e1")
    // Position-domain twin of the row7 data; extracts the row3 coefficients.
    return SeedFunction::piecewise(Domain::Position, {seg(r0, rh, twin_amp),
                                                      seg(rh, r1, -twin_amp),
                                                      seg(r2, r3, twin_amp)});
  if (name == "e2")
    return SeedFunction::piecewise(Domain::Position, {seg(r0, rh, twin_amp),
                                                      seg(rh, r1, -twin_amp),
                                                      seg(r1, r2, twin_amp)});
  if (name == "haar_cell")
    // Cell-supported superposition (1/sqrt(2a)) (1 + e^{-i s a/2}) on [0, a):
    // the filter seed whose coefficients are {1/sqrt(2), 1/sqrt(2)}.
    return SeedFunction::piecewise(Domain::Position,
                                   {seg(r0, r1, twin_amp),
                                    seg_mod(r0, r1, twin_amp, Rational(-1), 0.0)});
  if (name == "gaussian") return SeedFunction::gaussian();
  if (name == "hermite1") return SeedFunction::gaussian(0.0, 0.0, {1.0, 0.0}, 1);
  if (name == "zero")
    return SeedFunction::piecewise(Domain::Position, {seg(r0, r1, 0.0)});
  throw std::invalid_argument("unreachable");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "row1", "row2_literal", "row2_corrected", "row3",     "row4",
      "row5", "haar",         "row6_literal",   "row6_corrected",
      "row7", "row8",         "e1",             "e2",
      "haar_cell", "gaussian", "hermite1", "zero"};
  return names;
}

SeedFunction seed_preset(const std::string& name) {
  for (const std::string& known : preset_names())
    if (known == name) return build(name);
  if (name == "row2" || name == "row6")
    throw std::invalid_argument("preset '" + name + "' is ambiguous: use '" + name +
                                "_literal' (description as printed) or '" + name +
                                "_corrected' (reproduces the printed coefficients)");
  std::string msg = "unknown preset '" + name + "'; available:";
  for (const std::string& known : preset_names()) msg += " " + known;
  throw std::invalid_argument(msg);
}

std::string preset_note(const std::string& name) {
  if (name == "row2_literal")
    return "literal variant: the constant phase e^{-ia} yields e^{-ia} delta_{n,0}; "
           "the printed tail i(1-e^{-ia})/(2 pi n - a) belongs to row2_corrected";
  if (name == "row6_literal")
    return "literal variant: norm 2 data yields coefficients {1, 1} at n = 0, -1; "
           "row6_corrected (half-cell support) yields delta_{n,0}";
  if (name == "e1" || name == "e2")
    return "position-domain twin of a three-segment frequency row; extracts the row3 "
           "coefficients";
  return "";
}

}  // namespace seedmra
