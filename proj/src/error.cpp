#include "clusterkit/error.hpp"

namespace clusterkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NonUnitNegativePower: return "NonUnitNegativePower";
    case ErrorCode::ZeroIntoNegativePower: return "ZeroIntoNegativePower";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidSeed: return "InvalidSeed";
    case ErrorCode::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case ErrorCode::NotExchangeable: return "NotExchangeable";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotFrozen: return "NotFrozen";
    case ErrorCode::NameClash: return "NameClash";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotComponentEmbedding: return "NotComponentEmbedding";
    case ErrorCode::NotIdeal: return "NotIdeal";
    case ErrorCode::SubsetBudgetExceeded: return "SubsetBudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

NotAdmissibleError::NotAdmissibleError(std::size_t step, const std::string& detail)
    : Error(ErrorCode::NotAdmissible, detail), step_(step) {}

}  // namespace clusterkit
