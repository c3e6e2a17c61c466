#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antistrong {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph data: loops, parallel arcs, ids out of range.
class InvalidGraph : public Error {
public:
    using Error::Error;
};

// Arguments that violate an operation's precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotAntistrong : public Error {
public:
    using Error::Error;
};

class TooFewVertices : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

class NotAPartition : public Error {
public:
    using Error::Error;
};

// An exhaustive search ran past its configured budget.
class SizeLimit : public Error {
public:
    using Error::Error;
};

class NoBase : public Error {
public:
    using Error::Error;
};

class SchemaMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace antistrong
