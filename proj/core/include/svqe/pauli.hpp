// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string_view>

#include "svqe/sparse.hpp"
#include "svqe/state_vector.hpp"

namespace svqe {

/// Pauli string as a one-sparse oracle operator. Character q of `label`
/// (one of I, X, Y, Z) acts on qubit q.
std::shared_ptr<const SparseOracleMatrix> pauli_operator(std::string_view label);

/// Applies the string gate by gate to qubits [0, label.size()).
void apply_pauli(std::string_view label, StateVector& state);

/// <state|P|state>, computed by gate application.
double pauli_expectation(std::string_view label, const StateVector& state);

}  // namespace svqe
