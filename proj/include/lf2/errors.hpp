#pragma once

#include <stdexcept>
#include <string>

namespace lf2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LF2_ERROR(Name)                  \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

LF2_ERROR(DivisionByZero)
LF2_ERROR(TowerMismatch)
LF2_ERROR(InvalidArgument)
LF2_ERROR(VariableMismatch)
LF2_ERROR(NotAUnit)
LF2_ERROR(NonpositiveValuation)
LF2_ERROR(Unbalanced)
LF2_ERROR(NotRegular)

#undef LF2_ERROR

// Raised when a requested coefficient lies outside the known window.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int column)
      : Error(msg + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

}  // namespace lf2
