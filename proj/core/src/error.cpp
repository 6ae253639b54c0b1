#include "hkt/error.hpp"

namespace hkt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::DegenerateLattice: return "degenerate-lattice";
    case ErrorCode::NonPrimitiveVector: return "non-primitive-vector";
    case ErrorCode::DegenerateComplement: return "degenerate-complement";
    case ErrorCode::UnsupportedRank: return "unsupported-rank";
    case ErrorCode::InconsistentForm: return "inconsistent-form";
    case ErrorCode::UnsupportedWeight: return "unsupported-weight";
    case ErrorCode::ParityError: return "parity-error";
    case ErrorCode::WrongSignature: return "wrong-signature";
    case ErrorCode::UnsubstitutedC1: return "unsubstituted-c1";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::DependentVectors: return "dependent-vectors";
    case ErrorCode::IncompleteFamily: return "incomplete-family";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::InternalError: return "internal-error";
  }
  return "unknown";
}

}  // namespace hkt
