#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triso {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateAxis : public Error {
 public:
  DegenerateAxis() : Error("cannot bisect a degenerate interval") {}
};

class VariableOutOfRange : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPoly : public Error {
 public:
  DivisionByZeroPoly() : Error("division by the zero polynomial") {}
};

class InexactDivision : public Error {
 public:
  InexactDivision() : Error("polynomial division is not exact") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class NotSquarefree : public Error {
 public:
  NotSquarefree() : Error("polynomial is not squarefree") {}
};

class NoSignChange : public Error {
 public:
  NoSignChange() : Error("polynomial has no sign change across the interval") {}
};

/// Every coefficient of a polynomial in its main variable vanishes at the
/// algebraic point it was specialized to.
class IdenticallyZeroAtPoint : public Error {
 public:
  IdenticallyZeroAtPoint() : Error("polynomial vanishes identically at the point") {}
};

inline constexpr const char* kPositiveDimensionMessage =
    "The dimension of the system is positive.";

class PositiveDimension : public Error {
 public:
  PositiveDimension() : Error(kPositiveDimensionMessage) {}
};

class NotTriangular : public Error {
 public:
  NotTriangular(std::size_t index, const std::string& why)
      : Error("equation " + std::to_string(index + 1) + " is not triangular: " + why),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class NotARoot : public Error {
 public:
  NotARoot() : Error("point is not a root of the polynomial") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position),
        detail_(what) {}
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(std::size_t position, const std::string& name)
      : ParseError(position, "unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace triso
