#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace nrange {

using cplx = std::complex<double>;

/// Input violated a documented precondition (maps to CLI exit code 2).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructed object failed its own numerical verification (CLI exit code 3).
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Combinatorial budget exceeded (subset enumeration limits).
class BudgetError : public PreconditionError {
 public:
  explicit BudgetError(const std::string& msg) : PreconditionError(msg) {}
};

/// Central tolerance configuration. All numerical thresholds used by the
/// library default to these values; callers may override per call where an
/// operation takes a Tolerances argument.
struct Tolerances {
  double orthonormality = 1e-10;  // ||F*F - I||_F bound for frames
  double hermitian = 1e-10;       // ||H - H*||_F bound for Hermitian inputs
  double geometry = 1e-9;         // planar membership / distance comparisons
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

inline double sq(double x) { return x * x; }

}  // namespace nrange
