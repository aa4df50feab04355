#include "rankclass/error.hpp"

namespace rankclass {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ShapeTooLarge: return "ShapeTooLarge";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InvalidAffinePermutation: return "InvalidAffinePermutation";
    case ErrorKind::InvalidRankSet: return "InvalidRankSet";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotRankSetShaped: return "NotRankSetShaped";
    case ErrorKind::EmptyRankSet: return "EmptyRankSet";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::UnsupportedDiagram: return "UnsupportedDiagram";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rankclass
