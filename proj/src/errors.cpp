#include "toricschubert/errors.hpp"

namespace toricschubert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidLetter: return "InvalidLetter";
    case ErrorCode::InvalidDescent: return "InvalidDescent";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotDistinctWord: return "NotDistinctWord";
    case ErrorCode::NotGrassmannian: return "NotGrassmannian";
    case ErrorCode::DoesNotFit: return "DoesNotFit";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidHookParams: return "InvalidHookParams";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::NotToric: return "NotToric";
    case ErrorCode::ClassifierBug: return "ClassifierBug";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::MismatchedData: return "MismatchedData";
    case ErrorCode::NotUnimodularPiece: return "NotUnimodularPiece";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace toricschubert
