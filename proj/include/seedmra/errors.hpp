#pragma once

#include <stdexcept>
#include <string>

namespace seedmra {

// Symbol S(p) touches zero (within the singular threshold), so 1/sqrt(S)
// and everything downstream of it is undefined.
class SingularSymbol : public std::runtime_error {
 public:
  explicit SingularSymbol(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature window demonstrably fails to contain the integrand: sampled
// data stops while still large, or a 2D tail estimate exceeds tolerance.
class QuadratureDivergence : public std::runtime_error {
 public:
  explicit QuadratureDivergence(const std::string& what) : std::runtime_error(what) {}
};

// The l2 == 0 overlap column has not decayed below tolerance at the lattice
// truncation, so the modified-orthonormality sum sigma is not trustworthy.
class NonSummable : public std::runtime_error {
 public:
  explicit NonSummable(const std::string& what) : std::runtime_error(what) {}
};

// Cascade iteration left the stability envelope (sup-norm blow-up).
class Diverged : public std::runtime_error {
 public:
  explicit Diverged(const std::string& what) : std::runtime_error(what) {}
};

// Operation not defined for this seed kind (e.g. closed-form transform of
// sampled data).
class UnsupportedOperation : public std::runtime_error {
 public:
  explicit UnsupportedOperation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace seedmra
