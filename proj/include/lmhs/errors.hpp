#pragma once

#include <stdexcept>
#include <string>

namespace lmhs {

/// Malformed input from the caller. The CLI maps this family to exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed input, but the computation could not certify its result at the
/// requested tolerance. The CLI maps this family to exit code 3.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUpperHalfPlane : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidPeriodPoint : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotIsotropicAgainstW0 : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotUnipotent : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotPrimitive : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotIntegral : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidBoundaryPoint : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct OutsideConvergence : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct UnexpectedTopology : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NonIntegerRatio : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct RankDeficient : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};
struct ResidualTooLarge : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};
struct NotConstant : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};
struct WrongDimension : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};
struct DegenerateLine : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};
struct DegenerateF1 : NumericalFailure {
  using NumericalFailure::NumericalFailure;
};

}  // namespace lmhs
