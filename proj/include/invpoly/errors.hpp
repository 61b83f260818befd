#pragma once

#include <stdexcept>
#include <string>

namespace invpoly {

enum class ErrorKind {
    NotInvertible,
    NotIsolated,
    Unrecognized,
    NotLogGeneralType,
    SpecMismatch,
    DegenerateForm,
    TooLarge,
    GenusZero,
    InsufficientRange,
    NotAdmissible,
};

const char* error_name(ErrorKind kind);

// Every recoverable domain failure in the library is reported through this type.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace invpoly
