#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padicdyn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A subtraction (or a chain of operations) cancelled every tracked digit,
/// so the result's valuation is undetermined at the current precision.
/// Callers are expected to retry at higher precision.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what, std::size_t index = npos)
        : Error(what), index(index) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    /// Orbit index at which the failure occurred, when applicable.
    std::size_t index;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Dynamical operations require degree >= 2.
struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& what) : Error(what) {}
};

/// Operation requires a Certified Montel certificate.
struct CertificateRequired : Error {
    explicit CertificateRequired(const std::string& what) : Error(what) {}
};

/// Identity check requested on interval-valued (non-exact) data.
struct NotExact : Error {
    explicit NotExact(const std::string& what) : Error(what) {}
};

/// A certified invariant failed to hold; carries the counterexample text.
/// Indicates an implementation bug, never an expected runtime condition.
struct InvariantViolated : Error {
    explicit InvariantViolated(const std::string& what) : Error(what) {}
};

/// Malformed textual input (rationals, task files, serialized documents).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace padicdyn
