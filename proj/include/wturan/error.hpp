#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wturan {

/// Bad argument or broken precondition supplied by the caller.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

    ParseError with_line(std::size_t line) const {
        auto msg = std::string(what());
        return ParseError(msg, line);
    }

private:
    std::size_t line_;
};

/// A proven mathematical invariant failed to hold. Always a defect in this
/// library, never a property of the input.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wturan
