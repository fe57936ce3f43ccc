#pragma once

#include <stdexcept>
#include <string>

namespace bdg {

// Rejects malformed or out-of-contract input: parse failures, unknown ids,
// violated preconditions. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Signals that a mathematically guaranteed property failed to hold on data
// that passed its preconditions. Maps to CLI exit code 3.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace bdg
