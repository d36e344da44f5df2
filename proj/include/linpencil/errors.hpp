// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linpencil
{

enum class ErrorCode
{
  InvalidArgument,
  DimensionMismatch,
  SingularMatrix,
  UnsupportedBasis,
  InvalidBasis,
  DuplicateNodes,
  BadConfluency,
  GradeTooSmall,
  SingularPencil,
  SingularPencilEverywhere,
  NotMonic,
  SingularC0,
  EquivalenceFailed,
  NoConvergence,
};

constexpr std::string_view to_string(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::InvalidArgument:
      return "invalid argument";
    case ErrorCode::DimensionMismatch:
      return "dimension mismatch";
    case ErrorCode::SingularMatrix:
      return "singular matrix";
    case ErrorCode::UnsupportedBasis:
      return "unsupported basis";
    case ErrorCode::InvalidBasis:
      return "invalid basis";
    case ErrorCode::DuplicateNodes:
      return "duplicate node";
    case ErrorCode::BadConfluency:
      return "bad confluency";
    case ErrorCode::GradeTooSmall:
      return "grade too small";
    case ErrorCode::SingularPencil:
      return "singular pencil";
    case ErrorCode::SingularPencilEverywhere:
      return "singular pencil everywhere";
    case ErrorCode::NotMonic:
      return "not monic";
    case ErrorCode::SingularC0:
      return "singular C0";
    case ErrorCode::EquivalenceFailed:
      return "equivalence failed";
    case ErrorCode::NoConvergence:
      return "no convergence";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above; the
/// message always starts with the code's text so callers can grep for it.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace linpencil
