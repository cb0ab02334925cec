#pragma once

#include <stdexcept>
#include <string>

namespace capabp {

// Input outside an operation's documented domain (bad lambda, off-boundary
// point, invalid budget, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A boundary point sits on a ridge/edge and no face identifier was supplied.
struct AmbiguityError : std::runtime_error {
    explicit AmbiguityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition of a verification step failed (e.g. the half-line
// certificate before the main inequality).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampling hit a degenerate configuration (too many boundary-flagged points).
struct DegenerateConfigError : std::runtime_error {
    explicit DegenerateConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A facet of a test set could not be classified as wetted or free.
struct ClassificationError : std::runtime_error {
    explicit ClassificationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal numerical failure with diagnostics attached to the message.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace capabp
