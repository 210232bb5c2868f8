#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ricd {

enum class ErrorCode {
  InvalidArgument,
  EmptyPolyhedron,
  PointNotInPolyhedron,
  UnboundedPolyhedron,
  DimensionTooLarge,
  NotOptimal,
  UnboundedDirection,
  ModelTooLarge,
  UnknownSuite,
  ParseError,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::EmptyPolyhedron: return "EMPTY_POLYHEDRON";
    case ErrorCode::PointNotInPolyhedron: return "POINT_NOT_IN_POLYHEDRON";
    case ErrorCode::UnboundedPolyhedron: return "UNBOUNDED_POLYHEDRON";
    case ErrorCode::DimensionTooLarge: return "DIMENSION_TOO_LARGE";
    case ErrorCode::NotOptimal: return "NOT_OPTIMAL";
    case ErrorCode::UnboundedDirection: return "UNBOUNDED_DIRECTION";
    case ErrorCode::ModelTooLarge: return "MODEL_TOO_LARGE";
    case ErrorCode::UnknownSuite: return "UNKNOWN_SUITE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ricd
