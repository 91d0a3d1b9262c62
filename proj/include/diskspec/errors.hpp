#pragma once

#include <stdexcept>
#include <string>

namespace diskspec {

// Malformed input or an argument outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A series or iteration failed to reach its tolerance within the cap.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root scan found a cell that may contain more than one root.
class ScanResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration would exceed a resource bound.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace diskspec
