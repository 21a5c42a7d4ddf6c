#pragma once

#include <stdexcept>
#include <string>

namespace cosmicsusy {

// Base of everything the library throws on bad input or failed numerics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated parameter invariant (α ∉ (0,1], M ≤ 0, X_m index rules, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Argument outside the function's domain (x ≤ 0, non-finite input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A rational potential or wavefunction hit a pole. Carries the abscissa.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double location)
      : Error(what + " (singular at x = " + std::to_string(location) + ")"),
        location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

// Iterative method stopped before reaching the requested tolerance.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double best_estimate,
                 double achieved_tolerance)
      : Error(what + " (best estimate " + std::to_string(best_estimate) +
              ", achieved tolerance " + std::to_string(achieved_tolerance) +
              ")"),
        best_estimate_(best_estimate),
        achieved_tolerance_(achieved_tolerance) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_tolerance() const noexcept { return achieved_tolerance_; }

 private:
  double best_estimate_;
  double achieved_tolerance_;
};

// Two samples that must share a grid do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosmicsusy
