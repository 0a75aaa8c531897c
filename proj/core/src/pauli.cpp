// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/pauli.hpp"

#include <bit>
#include <string>

#include "svqe/circuit.hpp"
#include "svqe/error.hpp"

namespace svqe {

namespace {

struct Masks {
  BasisIndex flip = 0;  // X or Y
  BasisIndex z = 0;     // Y or Z
  int num_y = 0;
};

Masks parse(std::string_view label) {
  if (label.empty() || label.size() > 62) {
    throw Error(ErrorCode::kBadInput, "Pauli label must have 1..62 characters");
  }
  Masks m;
  for (std::size_t q = 0; q < label.size(); ++q) {
    const BasisIndex bit = BasisIndex{1} << q;
    switch (label[q]) {
      case 'I': break;
      case 'X': m.flip |= bit; break;
      case 'Y': m.flip |= bit; m.z |= bit; ++m.num_y; break;
      case 'Z': m.z |= bit; break;
      default:
        throw Error(ErrorCode::kBadInput,
                    "unknown Pauli '" + std::string(1, label[q]) + "'");
    }
  }
  return m;
}

}  // namespace

std::shared_ptr<const SparseOracleMatrix> pauli_operator(std::string_view label) {
  const Masks m = parse(label);
  // P|y> = i^{#Y} (-1)^{popcount(y & z)} |y ^ flip>, so <x|P|y> with
  // y = x ^ flip carries that phase.
  auto neighbor = [m](BasisIndex x, std::size_t i) -> std::optional<BasisIndex> {
    if (i != 0) return std::nullopt;
    return x ^ m.flip;
  };
  auto entry = [m](BasisIndex x, BasisIndex y) -> Complex {
    if ((x ^ y) != m.flip) return {};
    static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int parity = std::popcount(y & m.z) % 2;
    return kPowers[m.num_y % 4] * (parity != 0 ? -1.0 : 1.0);
  };
  return std::make_shared<const SparseOracleMatrix>(
      static_cast<int>(label.size()), 1, 1.0, std::move(neighbor),
      std::move(entry));
}

void apply_pauli(std::string_view label, StateVector& state) {
  parse(label);
  if (static_cast<int>(label.size()) > state.num_qubits()) {
    throw Error(ErrorCode::kRegisterMismatch, "Pauli string longer than state");
  }
  for (std::size_t q = 0; q < label.size(); ++q) {
    const int t = static_cast<int>(q);
    switch (label[q]) {
      case 'X': state.apply_matrix(t, gate_matrix(GateKind::kX, 0.0)); break;
      case 'Y': state.apply_matrix(t, gate_matrix(GateKind::kY, 0.0)); break;
      case 'Z': state.apply_matrix(t, gate_matrix(GateKind::kZ, 0.0)); break;
      default: break;
    }
  }
}

double pauli_expectation(std::string_view label, const StateVector& state) {
  StateVector applied = state;
  apply_pauli(label, applied);
  return state.inner(applied).real();
}

}  // namespace svqe
