// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "svqe/error.hpp"

namespace svqe {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "x";
    case GateKind::kY: return "y";
    case GateKind::kZ: return "z";
    case GateKind::kH: return "h";
    case GateKind::kS: return "s";
    case GateKind::kSdg: return "sdg";
    case GateKind::kRX: return "rx";
    case GateKind::kRY: return "ry";
    case GateKind::kRZ: return "rz";
    case GateKind::kCNOT: return "cnot";
    case GateKind::kCZ: return "cz";
  }
  return "?";
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ;
}

Matrix2 gate_matrix(GateKind kind, double angle, bool adjoint) {
  using namespace std::complex_literals;
  const double r = std::numbers::sqrt2 / 2.0;
  if (adjoint) angle = -angle;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (kind) {
    case GateKind::kX:
    case GateKind::kCNOT:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kY:
      return {0.0, -1i, 1i, 0.0};
    case GateKind::kZ:
    case GateKind::kCZ:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::kH:
      return {r, r, r, -r};
    case GateKind::kS:
      return {1.0, 0.0, 0.0, adjoint ? -1i : 1i};
    case GateKind::kSdg:
      return {1.0, 0.0, 0.0, adjoint ? 1i : -1i};
    case GateKind::kRX:
      return {c, -1i * s, -1i * s, c};
    case GateKind::kRY:
      return {c, -s, s, c};
    case GateKind::kRZ:
      return {std::exp(-0.5i * angle), 0.0, 0.0, std::exp(0.5i * angle)};
  }
  return {1.0, 0.0, 0.0, 1.0};
}

void AnsatzCircuit::validate() const {
  if (num_qubits < 1) {
    throw Error(ErrorCode::kRegisterMismatch, "circuit needs at least one qubit");
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string where = "gate #" + std::to_string(i) + " (" +
                              std::string(gate_name(g.kind)) + ")";
    if (g.target < 0 || g.target >= num_qubits) {
      throw Error(ErrorCode::kRegisterMismatch, where + " targets qubit " +
                                                    std::to_string(g.target));
    }
    const bool two_qubit = g.kind == GateKind::kCNOT || g.kind == GateKind::kCZ;
    if (two_qubit && (g.control < 0 || g.control >= num_qubits ||
                      g.control == g.target)) {
      throw Error(ErrorCode::kRegisterMismatch,
                  where + " has invalid control " + std::to_string(g.control));
    }
    if (g.param >= parameter_count) {
      throw Error(ErrorCode::kRegisterMismatch,
                  where + " uses parameter slot " + std::to_string(g.param) +
                      " of " + std::to_string(parameter_count));
    }
  }
}

AnsatzCircuit AnsatzTemplate::expand(int num_qubits) const {
  if (layers < 0) throw Error(ErrorCode::kBadInput, "layers must be >= 0");
  for (GateKind k : rotations) {
    if (!is_rotation(k)) {
      throw Error(ErrorCode::kBadInput, "template rotations must be rx/ry/rz");
    }
  }
  AnsatzCircuit c;
  c.num_qubits = num_qubits;
  auto rotation_block = [&] {
    for (int q = 0; q < num_qubits; ++q) {
      for (GateKind k : rotations) {
        c.gates.push_back({k, q, -1, c.parameter_count++, 0.0});
      }
    }
  };
  for (int layer = 0; layer < layers; ++layer) {
    rotation_block();
    if (num_qubits < 2) continue;
    if (entangler == Entangler::kCnotRing) {
      const int edges = num_qubits == 2 ? 1 : num_qubits;
      for (int q = 0; q < edges; ++q) {
        c.gates.push_back({GateKind::kCNOT, (q + 1) % num_qubits, q, -1, 0.0});
      }
    } else {
      for (int q = 0; q + 1 < num_qubits; ++q) {
        c.gates.push_back({GateKind::kCZ, q + 1, q, -1, 0.0});
      }
    }
  }
  rotation_block();
  return c;
}

void apply_circuit(const AnsatzCircuit& c, std::span<const double> theta,
                   StateVector& state, int offset, bool adjoint,
                   std::optional<int> control) {
  c.validate();
  if (static_cast<int>(theta.size()) != c.parameter_count) {
    throw Error(ErrorCode::kRegisterMismatch,
                "expected " + std::to_string(c.parameter_count) +
                    " parameters, got " + std::to_string(theta.size()));
  }
  if (offset < 0 || offset + c.num_qubits > state.num_qubits()) {
    throw Error(ErrorCode::kRegisterMismatch,
                "circuit register does not fit in the state");
  }
  if (control && (*control < 0 || *control >= state.num_qubits() ||
                  (*control >= offset && *control < offset + c.num_qubits))) {
    throw Error(ErrorCode::kRegisterMismatch,
                "control qubit overlaps the circuit register");
  }
  const BasisIndex outer = control ? BasisIndex{1} << *control : 0;
  auto apply_one = [&](const Gate& g) {
    const double angle = g.param >= 0 ? theta[g.param] : g.angle;
    BasisIndex mask = outer;
    if (g.control >= 0) mask |= BasisIndex{1} << (offset + g.control);
    state.apply_matrix(offset + g.target, gate_matrix(g.kind, angle, adjoint),
                       mask);
  };
  if (adjoint) {
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) apply_one(*it);
  } else {
    for (const Gate& g : c.gates) apply_one(g);
  }
}

}  // namespace svqe
