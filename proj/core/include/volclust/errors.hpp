#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace volclust {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries a 1-based line number when one is known
/// (0 means not applicable).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : Error(line > 0 ? message + " (line " + std::to_string(line) + ")" : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input is structurally valid but statistically unusable: zero variance,
/// empty selection, one-sided extreme set, and the like.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Argument outside its documented range.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace volclust
