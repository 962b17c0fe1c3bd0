#pragma once

#include <stdexcept>
#include <string>

namespace fsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid Jacobi parameters or other out-of-range configuration.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a function (e.g. log_gamma(0)).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Iterative numerical procedure failed to converge.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// A collocation or coefficient system could not be assembled (coincident nodes, singular system).
class AssemblyError : public Error {
public:
    using Error::Error;
};

/// Exact (or numerically exact) singularity met during a factorization.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// API misuse: mismatched dimensions, wrong scheme, missing exact solution.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace fsc
