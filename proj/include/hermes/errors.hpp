#pragma once

#include <stdexcept>
#include <string>

namespace hermes {

// Bad arguments: unsupported field size, wrong vector lengths, malformed tokens.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation undefined for the given value (inverse of zero, pole order of zero).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A checked invariant failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hermes
