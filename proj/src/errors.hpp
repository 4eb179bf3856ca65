#pragma once

#include <stdexcept>
#include <string>

namespace instcone {

// Error kinds mirror the status codes of the C API so exceptions can cross
// the boundary without losing their category.
enum class ErrorKind {
    Io,
    Parse,
    Schema,
    Validation,
    Precondition,
    NotChainMap,
    InvalidComplex,
    MissingScalar,
    TauZero,
    ConventionMismatch,
    WindowUnstable,
    GeneratorFailure,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Io: return "io";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Schema: return "schema";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::NotChainMap: return "not-chain-map";
        case ErrorKind::InvalidComplex: return "invalid-complex";
        case ErrorKind::MissingScalar: return "missing-scalar";
        case ErrorKind::TauZero: return "tau-zero";
        case ErrorKind::ConventionMismatch: return "convention-mismatch";
        case ErrorKind::WindowUnstable: return "window-unstable";
        case ErrorKind::GeneratorFailure: return "generator-failure";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace instcone
