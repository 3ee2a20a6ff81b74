#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clusterkit {

enum class ErrorCode {
  ParseError,
  UnknownVariable,
  NotDivisible,
  NonUnitNegativePower,
  ZeroIntoNegativePower,
  Overflow,
  InvalidSeed,
  NotSkewSymmetrizable,
  NotExchangeable,
  NotAdmissible,
  NotContained,
  NotFrozen,
  NameClash,
  InvalidMorphism,
  MissingImage,
  NotInjective,
  NotComponentEmbedding,
  NotIdeal,
  SubsetBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI and the HTTP service map codes to exit statuses and response codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Raised by apply_sequence; `step` is the zero-based index of the first
/// entry that is not exchangeable at its turn.
class NotAdmissibleError : public Error {
 public:
  NotAdmissibleError(std::size_t step, const std::string& detail);

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace clusterkit
