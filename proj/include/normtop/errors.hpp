#ifndef NORMTOP_ERRORS_HPP
#define NORMTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace normtop {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed construction or input: bad JSON, non-positive weight, empty
// member list, dimension mismatch between a table and a certificate.
struct InvalidArgument : Error {
    using Error::Error;
};

// A value was queried outside the slice a norm is defined on. Signals that
// the caller must extend the chain further before evaluating.
struct DomainViolation : Error {
    using Error::Error;
};

// A checked mathematical hypothesis failed: unit ball not covered, zero
// separation from the complement, beta > alpha, k == l.
struct PreconditionFailure : Error {
    using Error::Error;
};

} // namespace normtop

#endif
