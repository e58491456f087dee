#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mce {

/// Bad caller-supplied data: out-of-range vertex, self-loop, violated
/// generator hypothesis.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list text. Carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive method was asked to run beyond its hard size cutoff.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An exact integer result does not fit in 64 bits.
class RangeError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A documented precondition between library components was broken.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mce
