#pragma once

#include <stdexcept>
#include <string>

namespace opmono {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction input is not Hermitian within tolerance.
class NotHermitian : public Error {
public:
    using Error::Error;
};

// The Jacobi eigensolver did not reach its off-diagonal target within the
// sweep budget. Carries the residual off-diagonal Frobenius norm.
class EighNoConvergence : public Error {
public:
    EighNoConvergence(const std::string& msg, double residual)
        : Error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// An eigenvalue (or scalar argument) lies below the function's domain
// (gamma, infinity). Carries the offending value and the domain endpoint.
class SpectrumOutOfDomain : public Error {
public:
    SpectrumOutOfDomain(const std::string& msg, double value, double gamma)
        : Error(msg), value_(value), gamma_(gamma) {}
    double value() const { return value_; }
    double gamma() const { return gamma_; }

private:
    double value_;
    double gamma_;
};

// Scalar argument outside the function domain (grid points, pair endpoints).
class DomainError : public Error {
public:
    using Error::Error;
};

// A requested seed violates the admissibility conditions at construction
// (e.g. a power exponent <= 1, whose derivative is not strictly increasing).
class AdmissibilityViolation : public Error {
public:
    using Error::Error;
};

// Witness construction requires two distinct spectral points.
class DegeneratePair : public Error {
public:
    using Error::Error;
};

// The 2x2 slope matrix has no negative eigenvalue; it did not come from an
// admissible seed evaluated at a distinct pair.
class NoNegativeDirection : public Error {
public:
    NoNegativeDirection(const std::string& msg, double min_eig)
        : Error(msg), min_eig_(min_eig) {}
    double min_eig() const { return min_eig_; }

private:
    double min_eig_;
};

// No step on the search grid produced a positive margin.
class WitnessSearchFailed : public Error {
public:
    using Error::Error;
};

// Spectral width is below the scalarity threshold; no spectral pair exists.
class NumericallyScalar : public Error {
public:
    NumericallyScalar(const std::string& msg, double width)
        : Error(msg), width_(width) {}
    double width() const { return width_; }

private:
    double width_;
};

// Preconditions of the commuting-order check.
class NotCommuting : public Error {
public:
    using Error::Error;
};

class NotOrdered : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

} // namespace opmono
