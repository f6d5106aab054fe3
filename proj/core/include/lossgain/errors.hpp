#pragma once

#include <stdexcept>
#include <string>

namespace lossgain {

enum class ErrorCode {
  NotSymmetric,
  NotHermitian,
  ShapeMismatch,
  BadShape,
  SingularM,
  NonFinite,
  GammaZeroUndefined,
  BoundarySingular,
  RegionMismatch,
  ComplexBranch,
  DegreeOverflow,
  GridTooCoarse,
  ConfigError,
};

/// All preconditions and singular-parameter failures are reported through
/// this exception; the code distinguishes recoverable categories for the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::SingularM: return "SingularM";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::GammaZeroUndefined: return "GammaZeroUndefined";
    case ErrorCode::BoundarySingular: return "BoundarySingular";
    case ErrorCode::RegionMismatch: return "RegionMismatch";
    case ErrorCode::ComplexBranch: return "ComplexBranch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace lossgain
