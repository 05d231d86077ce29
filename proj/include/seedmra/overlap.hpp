#pragma once

// Overlap lattice of a seed against its own lattice translates:
//
//   S_{l1,l2} = Int h(s) conj(h(s + a l2)) e^{-i s a l1} ds
//             = Int hhat(p) conj(hhat(p - a l1)) e^{-i p a l2} dp,
//
// the two forms exchanging the roles of l1 and l2.  A Frequency-domain seed
// is paired through the second form directly on its stored data.
//
// Orthonormality condition (ONC):   S_{l1,l2} = delta_{l1,0} delta_{l2,0}.
// Modified condition (MONC):        S_{l1,l2} = delta_{l1,0} s_{l2}, with
//                                   sigma = sum_{l2} s_{l2} > 0.

#include <complex>
#include <string>
#include <vector>

#include "seedmra/seed.hpp"

namespace seedmra {

struct OverlapLattice {
  LatticeParams params;
  std::vector<complexd> values;  // (2L+1)^2, l1-major, each axis -L..L

  complexd at(int l1, int l2) const {
    const int L = params.L;
    return values[static_cast<std::size_t>((l1 + L) * (2 * L + 1) + (l2 + L))];
  }
};

struct OncResult {
  bool pass;
  double residual;  // max |S_l - delta_{l,0}|
};

struct MoncResult {
  bool pass;
  double sigma;  // sum over l2 of S_{0,l2}, real part
};

// Fills |l1|,|l2| <= params.L.  Piecewise and Gaussian seeds use exact
// closed forms; Sampled seeds use trapezoid quadrature on the merged grid
// and throw QuadratureDivergence when the window truncates visible mass.
OverlapLattice overlap_lattice(const SeedFunction& seed, const LatticeParams& params = {});

OncResult check_onc(const OverlapLattice& lat, double tol = 1e-10);

// Throws NonSummable when |S_{0,+-L}| still exceeds tol.
MoncResult check_monc(const OverlapLattice& lat, double tol = 1e-10);

// One line per lattice site: "l1,l2,re,im,abs", l1 then l2 ascending.
std::string overlap_csv(const OverlapLattice& lat);

}  // namespace seedmra
