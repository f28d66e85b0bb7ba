#ifndef CURVEDIM_ERRORS_HPP
#define CURVEDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvedim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed or fails basic validity checks.
struct ParseError : Error {
    using Error::Error;
};

// A computation came out identically zero up to the truncation order and
// cannot be certified; the caller should retry with a larger order.
struct TruncationInsufficient : Error {
    using Error::Error;
};

struct NotSquareFree : Error {
    using Error::Error;
};

// A special-point or branch computation leaves the rationals; the caller is
// expected to switch to parametrized input.
struct IrrationalCoefficients : Error {
    using Error::Error;
};

struct UnresolvedLocus : Error {
    using Error::Error;
};

struct NotOnCurve : Error {
    using Error::Error;
};

struct InconsistentMultiplicity : Error {
    using Error::Error;
};

struct BoundTooSmall : Error {
    using Error::Error;
};

struct NegativeGenus : Error {
    using Error::Error;
};

struct UnclassifiedPoint : Error {
    using Error::Error;
};

struct UnsupportedGenus : Error {
    using Error::Error;
};

struct GridUnderflow : Error {
    using Error::Error;
};

// Branch data declared symbolic carries orders only; a computation that needs
// actual coefficients cannot run on it.
struct SymbolicDataInsufficient : Error {
    using Error::Error;
};

} // namespace curvedim

#endif
