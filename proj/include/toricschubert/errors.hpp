#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricschubert {

enum class ErrorCode {
  InvalidPermutation,
  InvalidLetter,
  InvalidDescent,
  NotReduced,
  NotDistinctWord,
  NotGrassmannian,
  DoesNotFit,
  InvalidPartition,
  InvalidHookParams,
  InvalidParam,
  NotToric,
  ClassifierBug,
  ZeroVector,
  NotPointed,
  DeskScaleExceeded,
  DimensionMismatch,
  DegenerateCone,
  MismatchedData,
  NotUnimodularPiece,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricschubert
