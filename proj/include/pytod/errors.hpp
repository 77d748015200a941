#pragma once

#include <stdexcept>
#include <string>

namespace pytod {

// Base for all library errors so the CLI can map them to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error(message) {}
};

// Malformed input file: missing field, wrong shape. Message names the
// offending field and, where known, the owning object.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& message) : Error(message) {}
};

// Structural invariant breach in otherwise well-formed input.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error(message) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error(message) {}
};

}  // namespace pytod
