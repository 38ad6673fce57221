#pragma once

#include <stdexcept>
#include <string>

namespace trueelem {

enum class ErrorKind {
  RingMismatch,
  NotInIdeal,
  IndexOutOfRange,
  DiagonalIndex,
  DimensionTooSmall,
  NotSpecialLinear,
  NotUnit,
  NotInClass,
  NonzeroTrace,
  EnumerationLimit,
  Parse,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trueelem
