#pragma once

#include <stdexcept>
#include <string>

namespace syzkit {

// Raised on malformed textual input; position is a 0-based byte offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Raised when values from different ring contexts are mixed, or ranks disagree.
struct ContextError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace syzkit
