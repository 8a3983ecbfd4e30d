#pragma once

#include <stdexcept>
#include <string>

namespace rcx {

enum class ErrorCode {
  DegenerateFace = 1,
  DuplicateFace,
  UnknownSimplex,
  EmptyComplex,
  NoFaces,
  TooLargeForOracle,
  NotAClosedSurface,
  NothingToCollapse,
  InvalidParameter,
  CriticalCase,
  ParseError,
  IoError,
  InvalidConfig,
  Overflow,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// `code()` onto its status enum one to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rcx
