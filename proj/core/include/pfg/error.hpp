#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid trigger set or command configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Graph violates a structural invariant (duplicate segments, bad ids).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number when known.
class LoadError : public Error {
public:
    LoadError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pfg
