#pragma once

#include <stdexcept>
#include <string>

namespace vrpols {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix inversion hit a pivot below the singularity threshold.
class SingularError : public Error {
public:
    using Error::Error;
};

/// Rank-one inverse update with |1 + d'C^{-1}b| below threshold.
class DegenerateUpdateError : public Error {
public:
    using Error::Error;
};

class RankDeficientError : public Error {
public:
    using Error::Error;
};

class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

/// Diagonal noise with a non-positive variance.
class NotPositiveError : public Error {
public:
    using Error::Error;
};

/// Full covariance with an eigenvalue below the PSD tolerance.
class NotPsdError : public Error {
public:
    using Error::Error;
};

/// decompose() called on a correlated problem.
class NotDiagonalError : public Error {
public:
    using Error::Error;
};

/// w11_equal_variance() called with unequal base variances.
class NotEqualVarianceError : public Error {
public:
    using Error::Error;
};

/// Straight-line design with (near-)zero variance of the design points.
class DegenerateDesignError : public Error {
public:
    using Error::Error;
};

/// A root-formula denominator vanished; the message names it.
class DegenerateRootError : public Error {
public:
    using Error::Error;
};

/// Problem/report file could not be parsed; the message carries the field path.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace vrpols
