#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structurally invalid object (bad matrix shape, duplicate names, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Two operands that must agree in size do not.
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidPathError : public Error {
public:
    using Error::Error;
};

class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured size guard.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A symbol is not part of the declared alphabet, or two alphabets disagree.
class AlphabetError : public Error {
public:
    using Error::Error;
};

class SeedCountError : public Error {
public:
    using Error::Error;
};

class DeterminismRequiredError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `position` is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace wrec
