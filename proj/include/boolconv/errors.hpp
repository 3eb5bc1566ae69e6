#ifndef BOOLCONV_ERRORS_HPP
#define BOOLCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boolconv {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter is outside its admissible range (zero dilation factor,
/// negative Boolean power, out-of-range epsilon, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Atom list does not describe a probability measure (negative weight,
/// mass far from one).
struct InvalidMeasure : Error {
    using Error::Error;
};

/// Standardization was requested for a measure with zero variance.
struct DegenerateMeasure : Error {
    using Error::Error;
};

/// Root isolation found fewer sign-change intervals than the degree, or a
/// residual check failed: the polynomial does not have the all-real,
/// all-simple root structure the caller asserted.
struct RootStructureViolation : Error {
    using Error::Error;
};

/// Rational evaluation within rounding distance of a pole.
struct PoleEvaluation : Error {
    using Error::Error;
};

/// A rational function submitted for measure recovery is not the
/// reciprocal Cauchy transform of any probability measure.
struct NotAMeasure : Error {
    using Error::Error;
};

/// A numerical result drifted past its validity tolerance (weight sums,
/// moment normalization after an iteration step).
struct PrecisionFailure : Error {
    using Error::Error;
};

/// A documented operation precondition was not met by the inputs.
struct PreconditionViolation : Error {
    using Error::Error;
};

/// The two-sided atom structure expected of a central-limit iterate was
/// not present (outlier count differs from two).
struct StructureViolation : Error {
    using Error::Error;
};

}  // namespace boolconv

#endif
