#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clothoid {

enum class ErrorCode {
  DegenerateSecant,
  VanishingIntegral,
  NewtonBreakdown,
  DomainViolation,
  WeightSum,
  SequenceTooShort,
  ResourceLimit,
  DegenerateTriple,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library. `index` names the offending couple
/// or secant when one can be identified.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

  Error with_index(std::size_t index) const { return Error(code_, what(), index); }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace clothoid
