#pragma once

#include <stdexcept>
#include <string>

namespace spreadlen {

// Adding two exact values whose surd/pi kinds differ has no canonical result.
struct KindMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a closed form.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Iterative refinement stopped making progress before reaching tolerance.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature refinements disagree beyond the requested tolerance.
struct PrecisionNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fit input without enough variation to determine a line.
struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace spreadlen
