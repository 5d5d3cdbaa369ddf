#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autocf {

// Malformed text input; position is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An operation was asked to exceed a hard size limit (e.g. a word of length 2^n - 1).
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Input violates a mathematical hypothesis of the operation.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series has no unique lowest-depth term, so it cannot be inverted at its precision.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An identity that must hold by construction failed. Seeing this means a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace autocf
