#pragma once

#include <stdexcept>
#include <string>

namespace oddsub {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph input: bad vertex ids, self-loops, duplicate edges, invalid vertex sets.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Edge-list text that cannot be parsed. Carries the 1-based line number.
class ParseError : public GraphError {
public:
    ParseError(int line, const std::string& what)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A hypothesis of a pipeline does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds the guard of an exponential-time routine.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace oddsub
