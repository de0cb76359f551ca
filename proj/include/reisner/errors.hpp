#ifndef REISNER_ERRORS_HPP
#define REISNER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reisner {

// Thrown when an operation would exceed one of the configured resource caps.
// Callers that can continue (CLI, harnesses) report "undecided: cap" instead
// of a silent wrong answer.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in an ideal expression or corpus file; position is a byte
// offset into the offending text.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

} // namespace reisner

#endif
