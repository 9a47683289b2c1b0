#pragma once

#include <stdexcept>

namespace cuboid {

// Malformed textual input (CLI exit code 1).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside an operation's domain (CLI exit code 2).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Arithmetic produced something a structural guarantee rules out; always a
// bug, never a caller mistake (CLI exit code 3).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// All three face diagonals and the space diagonal came out rational. No such
// box is known to exist; refuse to pick a diagonal pair silently.
struct PerfectCuboidError : DomainError {
    using DomainError::DomainError;
};

}  // namespace cuboid
