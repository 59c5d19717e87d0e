#ifndef SRCOMPLEX_ERROR_HPP
#define SRCOMPLEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace srcomplex {

enum class ErrorCode {
  LengthMismatch,
  ZeroVector,
  Overflow,
  NotPointed,
  NotInGraver,
  NotSimple,
  FreeVectorPresent,
  FreeBouquetPresent,
  TooFewColumns,
  NonIncreasing,
  FullSupportViolated,
  GcdNotOne,
  FirstComponentNotPositive,
  BezoutMismatch,
  InvalidOmega,
  MalformedHeader,
  EntryCountMismatch,
  NonIntegerToken,
  InvalidArgument,
  OracleMismatch,
  Io,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srcomplex

#endif  // SRCOMPLEX_ERROR_HPP
