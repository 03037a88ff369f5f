#include "bhdimer/error.hpp"

namespace bhdimer {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::SymmetryViolation: return "symmetry violation";
    case ErrorCode::SiteAsymmetry: return "site asymmetry";
    case ErrorCode::DegenerateSpectrum: return "degenerate spectrum";
    case ErrorCode::InvalidDistribution: return "invalid distribution";
    case ErrorCode::DomainError: return "domain error";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::IoError: return "i/o error";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace bhdimer
