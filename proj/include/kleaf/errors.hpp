#pragma once

#include <stdexcept>
#include <string>

namespace kleaf {

/// Caller handed us something that violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input; carries the 1-based line number of the offending line.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An internal guarantee failed. Always a bug in this library, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace kleaf
