#ifndef SPINOR_FORGE_ERROR_HPP
#define SPINOR_FORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinor_forge {

enum class ErrorCode {
  DivisionByZero,
  IndexOutOfRange,
  ShapeMismatch,
  NotUnitVector,
  OddLength,
  ScaleMismatch,
  WrongRank,
  ZeroSpinor,
  RankTooSmall,
  MissingPair,
  EmptyInput,
  NotOrthogonal,
  UnsupportedDimension,
  ParseError,
  UnknownName,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this exception; `code()` is
/// the machine-readable reason, `what()` carries the human diagnostic.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_ERROR_HPP
