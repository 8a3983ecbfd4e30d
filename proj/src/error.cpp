#include "rcx/error.hpp"

namespace rcx {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::DuplicateFace: return "DuplicateFace";
    case ErrorCode::UnknownSimplex: return "UnknownSimplex";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::NoFaces: return "NoFaces";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::NotAClosedSurface: return "NotAClosedSurface";
    case ErrorCode::NothingToCollapse: return "NothingToCollapse";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::CriticalCase: return "CriticalCase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace rcx
