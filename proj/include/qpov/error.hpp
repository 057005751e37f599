#pragma once

#include <stdexcept>
#include <string>

namespace qpov {

enum class ErrorKind {
    Domain,
    Validation,
    Numerical,
    Degenerate,
    Data,
    Range,
    InsufficientData,
    DivergentMean,
    InvalidCurve,
    Fit,
    Io,
};

const char* to_string(ErrorKind kind);

// Base of every exception thrown by the library. The kind lets front ends map
// failures onto exit codes without a cascade of catch clauses.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

// Quadrature or root finding failed to reach the requested accuracy.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double error_estimate)
        : Error(ErrorKind::Numerical, what), error_estimate_(error_estimate) {}

    double error_estimate() const noexcept { return error_estimate_; }

private:
    double error_estimate_;
};

class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what)
        : Error(ErrorKind::InsufficientData, what) {}
};

class DivergentMeanError : public Error {
public:
    explicit DivergentMeanError(const std::string& what) : Error(ErrorKind::DivergentMean, what) {}
};

class InvalidCurveError : public Error {
public:
    explicit InvalidCurveError(const std::string& what) : Error(ErrorKind::InvalidCurve, what) {}
};

class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error(ErrorKind::Fit, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

} // namespace qpov
