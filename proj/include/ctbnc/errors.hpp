#pragma once

#include <stdexcept>
#include <string>

namespace ctbnc {

// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument or configuration supplied by the caller.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed input text (trajectory files, partition files, .ctbn models).
class ParseError : public Error {
public:
    using Error::Error;
    ParseError(const std::string& source, std::size_t line, const std::string& msg)
        : Error(source + ":" + std::to_string(line) + ": " + msg) {}
};

// Violated data or model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ctbnc
