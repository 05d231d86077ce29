#pragma once

// Candidate refinement coefficients extracted from a seed:
//
//   h_n = (1/sqrt(a)) Int h(s) e^{i s n a / 2} ds = sqrt(2*pi/a) hhat(-a n/2),
//
// and the four admissibility checks on a finite window:
//
//   r1:  sum_n h_n conj(h_{n+2l}) = delta_{l,0}
//   r2:  h_n = O(1/(1+n^2))           (window growth heuristic)
//   r3:  sum_n h_n = sqrt(2)          (symmetric partial sums)
//   r4:  H(w) = (1/sqrt 2) sum_n h_n e^{-i w n} != 0 on [-pi/2, pi/2]
//
// plus the seed-level identities that mirror r1/r3/r4 before extraction.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "seedmra/seed.hpp"

namespace seedmra {

struct FilterSequence {
  int n_min = 0;
  int n_max = 0;
  std::vector<complexd> coeffs;  // index n - n_min
  enum class Provenance { Extracted, Orthonormalized, Manual } provenance = Provenance::Manual;
  // Window edge still carries weight > 1e-12: the sequence continues past it.
  bool truncated_tail = false;

  complexd at(int n) const {
    if (n < n_min || n > n_max) return {0.0, 0.0};
    return coeffs[static_cast<std::size_t>(n - n_min)];
  }
  int size() const { return n_max - n_min + 1; }

  static FilterSequence manual(int n_min, std::vector<complexd> coeffs);
};

struct CheckOutcome {
  bool pass;
  double value;
};

struct SeedConditionValues {
  complexd vi1_lhs, vi1_rhs;  // sum_n h(n a)  vs  sqrt(sum_l h(a l1/2) conj(h(a l1/2 + a l2)))
  complexd vi2_lhs, vi2_rhs;  // frequency-side version (shift a l1 inside the conjugate)
  double vi3_min;             // min_w |sum_n h(a(n + w/2pi))| on [-pi/2, pi/2]
};

struct RelevanceTols {
  double r1 = 1e-10;
  int r1_lmax = 8;
  double r3 = 1e-10;
  double r4_delta = 1e-6;
  int r4_grid = 4096;  // intervals; the scan uses r4_grid+1 samples
  int vi_trunc = 8;
  int vi3_points = 257;
};

struct RelevanceReport {
  CheckOutcome r1;  // value = residual
  CheckOutcome r2;  // value = sup |h_n| (1+n^2)
  CheckOutcome r3;  // value = |sum - sqrt 2|
  CheckOutcome r4;  // value = min |H|
  std::optional<SeedConditionValues> seed;
  RelevanceTols tols;
};

FilterSequence extract_filter(const SeedFunction& seed, int n_range = 64);

CheckOutcome check_r1(const FilterSequence& f, int l_max = 8, double tol = 1e-10);
CheckOutcome check_r2(const FilterSequence& f);
CheckOutcome check_r3(const FilterSequence& f, double tol = 1e-10);
// grid counts intervals; the scan runs over grid+1 samples so -pi/2, 0, pi/2
// land exactly on nodes.
CheckOutcome check_r4(const FilterSequence& f, int grid = 4096, double delta = 1e-6);

// omega_grid counts points (odd keeps 0 on a node); trunc bounds the lattice
// sums |n|, |l1|, |l2| <= trunc.
SeedConditionValues seed_conditions(const SeedFunction& seed, int omega_grid = 257,
                                    int trunc = 8);

FilterSequence reflect(const FilterSequence& f);

// Drops exact-zero (|h| <= eps) edges; the checks are window-sensitive only
// through genuinely nonzero coefficients.
FilterSequence trimmed(const FilterSequence& f, double eps = 1e-14);

// Cell-supported seed (1/sqrt a) sum_n c_n e^{-i s n a/2} on [0, a):
// extract_filter returns c exactly.
SeedFunction cell_filter_seed(const FilterSequence& f);

RelevanceReport relevance_report(const FilterSequence& f, const SeedFunction* seed = nullptr,
                                 const RelevanceTols& tols = {});

// "n,re,im" rows, n ascending.
std::string filter_csv(const FilterSequence& f);
FilterSequence filter_from_csv(const std::string& text);

}  // namespace seedmra
