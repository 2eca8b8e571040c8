#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcomb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPosition : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UndeclaredStrategy : public ParseError {
public:
    using ParseError::ParseError;
};

/// Stored proof that is not valid JSON or does not follow the schema.
class ProofFormatError : public Error {
public:
    using Error::Error;
};

} // namespace tcomb
