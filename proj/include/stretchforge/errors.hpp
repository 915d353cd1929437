#pragma once

#include <stdexcept>
#include <string>

namespace stretchforge {

/// Operands disagree on the number of variables (or on dimensions).
struct VarMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Substituted series has a non-zero constant term.
struct InvalidSubstitution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A term with y-exponent 0 blocks division by y.
struct NotDivisible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Constant term is zero or not a rational square.
struct NoSquareRoot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Series does not define a stretching-function germ.
struct NotAGerm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Collar field has a normal term with y-exponent 0.
struct NotTangent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A basis bracket leaves the span of the basis.
struct NotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ball field fails the radial tangency identity.
struct NotSphereTangent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sample point outside the collar range (0,1).
struct SampleOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Series with zero constant term cannot be inverted as a unit.
struct NotInvertible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree by construction disagreed; implementation bug.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace stretchforge
