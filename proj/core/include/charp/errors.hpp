#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charp {

/// Base class for every error thrown by the kernel.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different towers / rings.
struct MismatchError : Error {
    using Error::Error;
};

/// Precondition violated on otherwise well-formed values (division by zero,
/// wrong degree, variable not in the p-basis, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A computation needs more series precision than the inputs carry.
struct PrecisionError : Error {
    using Error::Error;
};

/// No regularizing substitution exists below the search bound at the
/// current truncation order.
struct TruncationTooSmall : Error {
    using Error::Error;
};

/// Hensel lifting attempted at a root whose derivative is not a unit.
struct NotSimpleRoot : Error {
    using Error::Error;
};

/// Expression / descriptor syntax error, with the offset of the offending
/// character.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace charp

#endif
