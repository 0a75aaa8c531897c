// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/state_vector.hpp"

#include <string>
#include <utility>

#include "svqe/error.hpp"

namespace svqe {

namespace {

std::size_t checked_dimension(const RegisterLayout& layout) {
  const int n = layout.total_qubits();
  if (layout.system_qubits < 1 || n > StateVector::kMaxQubits) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "register of " + std::to_string(n) +
                    " qubits is outside [1, " +
                    std::to_string(StateVector::kMaxQubits) + "]");
  }
  return std::size_t{1} << n;
}

}  // namespace

StateVector::StateVector(RegisterLayout layout)
    : layout_(layout), amplitudes_(checked_dimension(layout)) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes)
    : layout_(layout), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dimension(layout)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "amplitude count does not match the register layout");
  }
}

StateVector StateVector::basis_state(RegisterLayout layout, BasisIndex index) {
  StateVector s(layout);
  if (index >= s.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "basis index " + std::to_string(index) + " out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dimension() != dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "state dimensions differ");
  }
  Complex total{};
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return total;
}

void StateVector::apply_matrix(int target, const Matrix2& m,
                               BasisIndex control_mask) {
  const BasisIndex bit = BasisIndex{1} << target;
  const BasisIndex dim = dimension();
  for (BasisIndex i = 0; i < dim; ++i) {
    if ((i & bit) != 0 || (i & control_mask) != control_mask) continue;
    const Complex a0 = amplitudes_[i];
    const Complex a1 = amplitudes_[i | bit];
    amplitudes_[i] = m[0] * a0 + m[1] * a1;
    amplitudes_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

double StateVector::probability_zero(int qubit) const {
  const BasisIndex bit = BasisIndex{1} << qubit;
  double p = 0.0;
  for (BasisIndex i = 0; i < dimension(); ++i) {
    if ((i & bit) == 0) p += std::norm(amplitudes_[i]);
  }
  return p;
}

}  // namespace svqe
