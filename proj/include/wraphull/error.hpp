#pragma once

#include <stdexcept>
#include <string>

namespace wraphull {

// Numeric values are shared with the C API status codes in wraphull.h.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  EmptySample = 2,
  BadRadius = 3,
  UnboundedHull = 4,
  DegenerateHull = 5,
  InconsistentHull = 6,
  ZeroMeasure = 7,
  EmptyAggregate = 8,
  DuplicatePoint = 9,
  PointOutsideWindow = 10,
  ParseError = 11,
  IoError = 12,
  CellFailed = 13,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wraphull
