// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file term_apply.hpp
 * @brief Applying a self-inverse term G to the system register.
 *
 * The oracle-faithful path runs the register sequence
 *
 *   O_F       |x>|0>|0>        -> |x>|y_x>|0>
 *   O_H       sign qubit       ^= [G_{x y_x} < 0]
 *   phase     multiply by G_{y_x x} (controlled)
 *   O_H^-1    sign qubit       ^= [G_{x y_x} < 0]
 *   swap      system <-> copy  (controlled)
 *   O_F^-1    copy             ^= y(system)
 *
 * on a state that carries the copy register and the sign qubit. Only the
 * phase and swap are controlled; the oracle pairs cancel when the control
 * is off.
 */

#pragma once

#include <optional>

#include "svqe/sparse.hpp"
#include "svqe/state_vector.hpp"

namespace svqe {

/// |x> -> G|x> on the system register, optionally controlled.
void apply_term_direct(const SelfInverseTerm& g, StateVector& state,
                       std::optional<int> control = std::nullopt);

/// Oracle sequence above. Adds one each of of / oh / oh_inverse / of_inverse
/// to `counter`, plus the worst-case source queries of each step over the
/// basis states in the support. Throws ANCILLA_NOT_ZEROED when the copy or
/// sign register is populated on entry and ANCILLA_RESIDUE when it is not
/// clean on exit.
void apply_term_oracle_faithful(const SelfInverseTerm& g, StateVector& state,
                                QueryCounter& counter,
                                std::optional<int> control = std::nullopt);

}  // namespace svqe
