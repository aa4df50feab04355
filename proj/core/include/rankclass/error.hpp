#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankclass {

enum class ErrorKind {
  Parse,
  ShapeTooLarge,
  SizeMismatch,
  NotHomogeneous,
  InvalidPermutation,
  InvalidAffinePermutation,
  InvalidRankSet,
  NotBounded,
  NotRankSetShaped,
  EmptyRankSet,
  ContextMismatch,
  UnsupportedDiagram,
  NegativeMultiplicity,
  TooLarge,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All domain failures raised by the library. The kind is stable and is what
// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rankclass
