// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "svqe/sparse.hpp"

namespace svqe {

/// Qubit layout: system [0, n), then optionally the oracle ancillas
/// (copy register [n, 2n) and one sign qubit at 2n), then optionally the
/// Hadamard-test qubit last.
struct RegisterLayout {
  int system_qubits = 1;
  bool oracle_ancillas = false;
  bool test_ancilla = false;

  int ancilla_copy_offset() const { return system_qubits; }
  int sign_qubit() const { return 2 * system_qubits; }
  int test_qubit() const {
    return oracle_ancillas ? 2 * system_qubits + 1 : system_qubits;
  }
  int total_qubits() const {
    return system_qubits + (oracle_ancillas ? system_qubits + 1 : 0) +
           (test_ancilla ? 1 : 0);
  }
};

using Matrix2 = std::array<Complex, 4>;  // row-major

class StateVector {
 public:
  /// Largest total register the simulator accepts.
  static constexpr int kMaxQubits = 24;

  /// |0...0> on the given layout.
  explicit StateVector(RegisterLayout layout);
  StateVector(RegisterLayout layout, std::vector<Complex> amplitudes);

  static StateVector basis_state(RegisterLayout layout, BasisIndex index);

  const RegisterLayout& layout() const { return layout_; }
  int num_qubits() const { return layout_.total_qubits(); }
  BasisIndex dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex operator[](BasisIndex i) const { return amplitudes_[i]; }
  Complex& operator[](BasisIndex i) { return amplitudes_[i]; }

  double norm_squared() const;
  /// <this|other>.
  Complex inner(const StateVector& other) const;

  /// Applies a 2x2 unitary to `target` on the subspace where every bit of
  /// `control_mask` is set.
  void apply_matrix(int target, const Matrix2& m, BasisIndex control_mask = 0);

  /// Probability that `qubit` reads 0.
  double probability_zero(int qubit) const;

 private:
  RegisterLayout layout_;
  std::vector<Complex> amplitudes_;
};

}  // namespace svqe
