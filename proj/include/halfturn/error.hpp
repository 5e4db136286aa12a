#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halfturn {

enum class ErrorCode {
  ZeroTriple,
  DivisionByZero,
  ParseError,
  IdenticalPoints,
  IdenticalLines,
  InfinitePoint,
  InfiniteCenter,
  NotOnLine,
  CoincidesWithBasePoint,
  NotCollinear,
  ZeroImage,
  Singular,
  OnSideLine,
  CollinearSources,
  DegenerateP,
  OnSideOfABC,
  OnSideOfAnticomplementary,
  UnknownName,
  DegenerateTriangle,
  ProofFailed,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a typed code; the CLI maps
// these onto exit status 2 and prints the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace halfturn
