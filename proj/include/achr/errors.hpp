#ifndef ACHR_ERRORS_HPP
#define ACHR_ERRORS_HPP

#include <stdexcept>

namespace achr {

/// Requested field/plane order is not a prime power.
struct NotPrimePower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic attempted between elements of different fields.
struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Multiplicative inverse of zero requested.
struct ZeroInverse : std::domain_error {
    using std::domain_error::domain_error;
};

/// A point pair lies on zero or several lines.
struct NoUniqueLine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incidence structure fails the basic plane counts (B2/B4/B5).
struct InvalidPlane : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A point does not occur exactly r+1 times in a base matrix.
struct BadMultiplicity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shift count below the construction's minimum.
struct STooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation input violates a documented precondition.
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No valid swap column exists for the one-extra-colour extension.
struct ExtensionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bound arguments are outside the rule's hypotheses.
struct HypothesisViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace achr

#endif
