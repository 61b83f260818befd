#include "invpoly/errors.hpp"

namespace invpoly {

const char* error_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::Unrecognized: return "Unrecognized";
    case ErrorKind::NotLogGeneralType: return "NotLogGeneralType";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::GenusZero: return "GenusZero";
    case ErrorKind::InsufficientRange: return "InsufficientRange";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    }
    return "Unknown";
}

DomainError::DomainError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind)
{
}

} // namespace invpoly
