#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace companion_smith {

// Base of every error the library raises on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonMonicDivisor : public Error {
 public:
  NonMonicDivisor() : Error("divisor polynomial is not monic") {}
  explicit NonMonicDivisor(const std::string& what) : Error(what) {}
};

class DivisionByZeroPolynomial : public Error {
 public:
  DivisionByZeroPolynomial() : Error("division by the zero polynomial") {}
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("matrix is not square") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidDivisorChain : public Error {
 public:
  using Error::Error;
};

class AllZeroMatrix : public Error {
 public:
  AllZeroMatrix() : Error("f(C_g) is the zero matrix: g divides f") {}
};

class ResultantsNotCoprime : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace companion_smith
