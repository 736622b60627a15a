#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amoeba {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial / polytope / Gamma-product text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Input outside an operation's domain (degenerate polytope, zero coordinate
/// under a negative exponent, all-zero coefficient vector, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace amoeba
