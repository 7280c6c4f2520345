#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sparsegroup {

enum class ErrorCode {
  InvalidGap,
  NotASemigroup,
  NotCofinite,
  TrivialSemigroup,
  InvalidParameters,
  ConductorTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by constructors and operations whose inputs violate their contract.
class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sparsegroup
