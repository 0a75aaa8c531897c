// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svqe/state_vector.hpp"

namespace svqe {

enum class GateKind { kX, kY, kZ, kH, kS, kSdg, kRX, kRY, kRZ, kCNOT, kCZ };

/// Lower-case gate name as used in templates and reports ("rx", "cnot", ...).
std::string_view gate_name(GateKind kind);
bool is_rotation(GateKind kind);

struct Gate {
  GateKind kind = GateKind::kX;
  int target = 0;
  int control = -1;     ///< CNOT / CZ only
  int param = -1;       ///< rotations: parameter slot, or -1 for `angle`
  double angle = 0.0;   ///< fixed rotation angle when param < 0

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Single-qubit matrix of the gate (X for CNOT, Z for CZ).
Matrix2 gate_matrix(GateKind kind, double angle, bool adjoint = false);

struct AnsatzCircuit {
  int num_qubits = 1;
  std::vector<Gate> gates;
  int parameter_count = 0;

  /// Throws REGISTER_MISMATCH on out-of-range qubits or parameter slots.
  void validate() const;

  friend bool operator==(const AnsatzCircuit&, const AnsatzCircuit&) = default;
};

struct AnsatzTemplate {
  enum class Entangler { kCnotRing, kCzLine };

  int layers = 1;
  Entangler entangler = Entangler::kCnotRing;
  std::vector<GateKind> rotations{GateKind::kRY};

  /// `layers` blocks of (rotation on every qubit, entangler) followed by a
  /// final rotation block: (layers + 1) * n * |rotations| parameters.
  AnsatzCircuit expand(int num_qubits) const;
};

/// Applies c to qubits [offset, offset + c.num_qubits) of the state. With
/// `adjoint` the gates run reversed and inverted; with `control` every gate
/// is conditioned on that qubit.
void apply_circuit(const AnsatzCircuit& c, std::span<const double> theta,
                   StateVector& state, int offset = 0, bool adjoint = false,
                   std::optional<int> control = std::nullopt);

}  // namespace svqe
