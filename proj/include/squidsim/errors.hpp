#pragma once

#include <stdexcept>
#include <string>

namespace squidsim {

/// Base class for every error raised by the simulator.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical parameter or argument violates its invariant.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed or out-of-range configuration (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The split-window voltage average did not settle (CLI exit code 3).
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double flux_wb)
        : Error(what), flux_(flux_wb) {}
    double flux() const noexcept { return flux_; }

private:
    double flux_;
};

/// The integrated state became non-finite (CLI exit code 3).
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, double time)
        : Error(what), time_(time) {}
    /// Dimensionless time at which the state stopped being finite.
    double time() const noexcept { return time_; }

private:
    double time_;
};

/// Golden-section search found its minimum on the bracket boundary.
class BracketError : public Error {
public:
    BracketError(const std::string& what, double boundary_argmin)
        : Error(what), argmin_(boundary_argmin) {}
    double boundary_argmin() const noexcept { return argmin_; }

private:
    double argmin_;
};

/// The loaded impedance in the gain denominator is numerically zero.
class SingularGainError : public Error {
public:
    SingularGainError(const std::string& what, double denominator)
        : Error(what), denominator_(denominator) {}
    double denominator() const noexcept { return denominator_; }

private:
    double denominator_;
};

/// No Josephson oscillation at the operating point.
class ZeroVoltageError : public Error {
public:
    using Error::Error;
};

} // namespace squidsim
