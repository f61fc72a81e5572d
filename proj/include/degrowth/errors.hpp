#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degrowth {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on the number of variables or components.
class ArityError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument value was violated (bad parameter, singular matrix, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Composition produced all-zero components: the image of the inner map lies in the
/// indeterminacy set of the outer one.
class CompositionCollapse : public Error {
public:
    CompositionCollapse(const std::string& what, std::size_t step)
        : Error(what), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// No inverse information is attached, or a declared inverse failed verification.
class InverseError : public Error {
public:
    using Error::Error;
};

/// Sequence horizon too short for the requested analysis.
class HorizonTooShort : public Error {
public:
    using Error::Error;
};

/// A whole coordinate hyperplane lies in the indeterminacy set.
class HyperplaneInIndeterminacy : public Error {
public:
    using Error::Error;
};

/// Lexical or syntactic error in a map expression; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace degrowth
