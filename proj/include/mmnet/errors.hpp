#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmnet {

/// Base class of every error raised by the library.
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments to a constructor (block sizes, mode lists, non-finite data).
class ConstructionError : public NetworkError {
public:
    using NetworkError::NetworkError;
};

/// The target representation does not exist: the lower half of the re-expressed
/// basis is singular or too badly conditioned to invert.
class SingularLowerHalf : public NetworkError {
public:
    SingularLowerHalf(const std::string& what, double condition)
        : NetworkError(what), condition_(condition) {}

    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

/// Two networks cannot be joined: mode count, impedances or frequency differ.
class InterfaceMismatch : public NetworkError {
public:
    using NetworkError::NetworkError;
};

class ParseError : public NetworkError {
public:
    ParseError(std::size_t line, const std::string& message)
        : NetworkError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Port layout that cannot be mapped onto a two-sided network (odd port count).
class UnsupportedTopology : public NetworkError {
public:
    using NetworkError::NetworkError;
};

/// Valid input that this library deliberately does not read (e.g. Touchstone Z data).
class Unsupported : public NetworkError {
public:
    using NetworkError::NetworkError;
};

/// The sweep cannot be represented in the requested output format.
class UnsupportedExport : public NetworkError {
public:
    using NetworkError::NetworkError;
};

}  // namespace mmnet
