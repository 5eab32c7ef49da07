#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jasonrs::logic {

/// Base class for failures raised while evaluating formulas or arithmetic.
class LogicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundArithmetic : public LogicError {
public:
    using LogicError::LogicError;
};

class DivisionByZero : public LogicError {
public:
    DivisionByZero() : LogicError("division by zero") {}
};

class ArithmeticOverflow : public LogicError {
public:
    ArithmeticOverflow() : LogicError("decimal arithmetic overflow") {}
};

/// An operand had the wrong kind of term, e.g. an atom inside `X + 1`.
class TypeMismatch : public LogicError {
public:
    using LogicError::LogicError;
};

/// A negation-as-failure node was reached while one of the variables it
/// shares with the rest of its clause was still unbound.
class UnboundNegation : public LogicError {
public:
    using LogicError::LogicError;
};

class DepthExceeded : public LogicError {
public:
    explicit DepthExceeded(std::size_t bound)
        : LogicError("resolution step bound of " + std::to_string(bound) + " exceeded"), bound_(bound) {}
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string expected)
        : std::runtime_error(format(line, column, expected)),
          line_(line), column_(column), expected_(std::move(expected)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& expected) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + expected;
    }

    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

} // namespace jasonrs::logic
