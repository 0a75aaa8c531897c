// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/error.hpp"

namespace svqe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionTooLarge: return "DIMENSION_TOO_LARGE";
    case ErrorCode::kInvalidTolerance: return "INVALID_TOLERANCE";
    case ErrorCode::kMismatchedParent: return "MISMATCHED_PARENT";
    case ErrorCode::kNotConjugateClosed: return "NOT_CONJUGATE_CLOSED";
    case ErrorCode::kDuplicateMonomial: return "DUPLICATE_MONOMIAL";
    case ErrorCode::kNotOneSparse: return "NOT_ONE_SPARSE";
    case ErrorCode::kRegisterMismatch: return "REGISTER_MISMATCH";
    case ErrorCode::kAncillaNotZeroed: return "ANCILLA_NOT_ZEROED";
    case ErrorCode::kAncillaResidue: return "ANCILLA_RESIDUE";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kIncompletePlan: return "INCOMPLETE_PLAN";
    case ErrorCode::kBadInput: return "BAD_INPUT";
    case ErrorCode::kNonHermitian: return "NON_HERMITIAN";
  }
  return "UNKNOWN";
}

}  // namespace svqe
