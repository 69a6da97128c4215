#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerstab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

/// The requested operation is not defined for the coefficient domain at hand.
class UnsupportedOperation : public Error {
  public:
    using Error::Error;
};

/// Operands live in different ring contexts.
class ContextMismatch : public Error {
  public:
    explicit ContextMismatch(const std::string& what) : Error("context mismatch: " + what) {}
};

/// A caller-side precondition (hypothesis of an algorithm) does not hold.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// A degree, term-count or generator-count guard tripped. The computation was
/// abandoned; no wrong answer was produced.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

/// Syntax error in the polynomial grammar or the script language.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string& m, std::size_t line, std::size_t col) {
        return std::to_string(line) + ":" + std::to_string(col) + ": " + m;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace powerstab
