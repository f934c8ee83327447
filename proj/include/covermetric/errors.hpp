#ifndef COVERMETRIC_ERRORS_HPP
#define COVERMETRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covermetric {

// Base class for all errors raised by this library. Domain errors (bad
// parameters, unsatisfiable preconditions) derive from DomainError; file
// format problems derive from ParseError.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct NonPrimeError : DomainError {
    explicit NonPrimeError(const std::string& msg) : DomainError(msg) {}
};

struct FieldTooLargeError : DomainError {
    explicit FieldTooLargeError(const std::string& msg) : DomainError(msg) {}
};

struct DivisionByZeroError : DomainError {
    explicit DivisionByZeroError(const std::string& msg) : DomainError(msg) {}
};

struct ShapeMismatchError : DomainError {
    explicit ShapeMismatchError(const std::string& msg) : DomainError(msg) {}
};

struct DependentGeneratorsError : DomainError {
    explicit DependentGeneratorsError(const std::string& msg) : DomainError(msg) {}
};

struct TooLargeToEnumerateError : DomainError {
    explicit TooLargeToEnumerateError(const std::string& msg) : DomainError(msg) {}
};

struct RetriesExhaustedError : DomainError {
    explicit RetriesExhaustedError(const std::string& msg) : DomainError(msg) {}
};

struct ParameterRegimeError : DomainError {
    explicit ParameterRegimeError(const std::string& msg) : DomainError(msg) {}
};

// An oracle cross-check disagreed; indicates an implementation bug.
struct MismatchDetectedError : Error {
    explicit MismatchDetectedError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace covermetric

#endif  // COVERMETRIC_ERRORS_HPP
