#ifndef BPFO_ERRORS_HPP
#define BPFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bpfo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// a = 0 or b = 0 handed to make_context.
struct ZeroParameter : Error {
    using Error::Error;
};

/// Two quadratic elements with different discriminants were mixed.
struct ContextMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Nonzero quadratic element with zero norm (possible when D is a
/// perfect square); it has no inverse.
struct NormZero : Error {
    using Error::Error;
};

/// D = a^2 b^2 + 4ab = 0 (i.e. ab = -4); Binet-based operations are
/// undefined on such a context.
struct DegenerateDiscriminant : Error {
    using Error::Error;
};

/// A value that must be rational came out with a nonzero sqrt(D)
/// component. Signals an implementation bug, never a data error.
struct InternalSurdResidue : Error {
    using Error::Error;
};

/// A Laurent series that must be a power series kept a nonzero
/// negative-degree coefficient.
struct PrincipalPartResidue : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace bpfo

#endif
