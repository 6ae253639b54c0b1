#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkt {

enum class ErrorCode {
  InvalidParameter,
  DegenerateLattice,
  NonPrimitiveVector,
  DegenerateComplement,
  UnsupportedRank,
  InconsistentForm,
  UnsupportedWeight,
  ParityError,
  WrongSignature,
  UnsubstitutedC1,
  DegreeMismatch,
  DependentVectors,
  IncompleteFamily,
  CapExceeded,
  ParseError,
  InternalError,
};

// Stable machine-readable name, used in CLI error payloads.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace hkt
