#pragma once

#include <stdexcept>
#include <string>

namespace toroidal {

// Raised when an input document or text form cannot be parsed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation is invoked outside its stated preconditions.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toroidal
