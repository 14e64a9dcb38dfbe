#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

// Invalid argument to a library call (out-of-range probability, overlapping
// sets, c <= 3, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed graph file. line() is 1-based; 0 means "not tied to a line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input exceeds an enumeration guard of an exact/brute-force routine.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// The separator process ran out of vertices without producing either a path
// of the requested length or two sets of the requested size.
class ExhaustionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A proven invariant did not hold. Always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ramsey
