// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svqe {

enum class ErrorCode {
  kDimensionTooLarge,
  kInvalidTolerance,
  kMismatchedParent,
  kNotConjugateClosed,
  kDuplicateMonomial,
  kNotOneSparse,
  kRegisterMismatch,
  kAncillaNotZeroed,
  kAncillaResidue,
  kDimensionMismatch,
  kIncompletePlan,
  kBadInput,
  kNonHermitian,
};

std::string_view to_string(ErrorCode code);

/// Library error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace svqe
