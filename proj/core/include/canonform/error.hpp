#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace canonform {

enum class ErrorKind {
    RingMismatch,
    DivisionByZero,
    ZeroArgument,
    ZeroModulus,
    FactorizationIncomplete,
    SizeMismatch,
    ShapeMismatch,
    IndexOutOfRange,
    EmptyResult,
    BadIndexSets,
    NotSquare,
    TooLargeForOracle,
    SingularMatrix,
    NotAUnit,
    AllZeroColumn,
    NotMonic,
    RankTooSmall,
    NonLinearElementaryDivisor,
    UnsupportedRing,
    InvalidArgument,
    Parse,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception; `kind()` is the
/// machine-readable part, `what()` carries a human-oriented message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the scalar and matrix-file readers. Line and column are 1-based;
/// zero means "not applicable".
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& message, std::size_t line = 0,
               std::size_t column = 0)
        : Error(kind, located(message, line, column)),
          detail_(message),
          line_(line),
          column_(column) {}

    /// The message without kind or position prefix.
    const std::string& detail() const noexcept { return detail_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string located(const std::string& message, std::size_t line,
                               std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
               message;
    }

    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace canonform
