#pragma once

#include <stdexcept>
#include <string>

namespace vernon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain an operation is defined on
/// (a variable missing from a set, a bijection with the wrong codomain).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two variable sets that must be disjoint are not.
class ClashError : public Error {
public:
    using Error::Error;
};

/// An expression (combinator or mu-expression) is ill-typed.
class TypeError : public Error {
public:
    using Error::Error;
};

/// A graph violates a structural invariant or is not a tree.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A search ran out of its step budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace vernon
