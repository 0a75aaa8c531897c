// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/term_apply.hpp"

#include <algorithm>
#include <vector>

#include "svqe/error.hpp"

namespace svqe {

namespace {

void check_system(const SelfInverseTerm& g, const StateVector& state,
                  std::optional<int> control) {
  if (g.num_qubits() != state.layout().system_qubits) {
    throw Error(ErrorCode::kRegisterMismatch,
                "term acts on " + std::to_string(g.num_qubits()) +
                    " qubits but the system register has " +
                    std::to_string(state.layout().system_qubits));
  }
  if (control && (*control < g.num_qubits() || *control >= state.num_qubits())) {
    throw Error(ErrorCode::kRegisterMismatch,
                "control qubit must lie outside the system register");
  }
}

// Per-step worst case of the source queries over the states visited.
struct StepTally {
  QueryCounter worst;
  void record(const QueryCounter& c) {
    worst.source_of = std::max(worst.source_of, c.source_of);
    worst.source_oh = std::max(worst.source_oh, c.source_oh);
  }
};

template <class Fn>
void permute(StateVector& state, Fn&& target_of) {
  std::vector<Complex> out(state.dimension());
  for (BasisIndex i = 0; i < state.dimension(); ++i) {
    const Complex a = state[i];
    if (a == Complex{}) continue;
    out[target_of(i)] += a;
  }
  std::copy(out.begin(), out.end(), state.amplitudes().begin());
}

}  // namespace

void apply_term_direct(const SelfInverseTerm& g, StateVector& state,
                       std::optional<int> control) {
  check_system(g, state, control);
  const BasisIndex sys = (BasisIndex{1} << g.num_qubits()) - 1;
  const BasisIndex ctl = control ? BasisIndex{1} << *control : 0;
  std::vector<Complex> out(state.dimension());
  for (BasisIndex i = 0; i < state.dimension(); ++i) {
    const Complex a = state[i];
    if (a == Complex{}) continue;
    if ((i & ctl) != ctl) {
      out[i] += a;
      continue;
    }
    const BasisIndex x = i & sys;
    const BasisIndex y = g.partner(x);
    out[(i & ~sys) | y] += g.value(y, x) * a;
  }
  std::copy(out.begin(), out.end(), state.amplitudes().begin());
}

void apply_term_oracle_faithful(const SelfInverseTerm& g, StateVector& state,
                                QueryCounter& counter,
                                std::optional<int> control) {
  check_system(g, state, control);
  const RegisterLayout& layout = state.layout();
  if (!layout.oracle_ancillas) {
    throw Error(ErrorCode::kRegisterMismatch,
                "oracle-faithful application needs the ancilla registers");
  }
  const int n = g.num_qubits();
  const BasisIndex sys = (BasisIndex{1} << n) - 1;
  const int copy_shift = layout.ancilla_copy_offset();
  const BasisIndex copy_mask = sys << copy_shift;
  const BasisIndex sign_bit = BasisIndex{1} << layout.sign_qubit();
  const BasisIndex ancillas = copy_mask | sign_bit;
  const BasisIndex ctl = control ? BasisIndex{1} << *control : 0;

  auto ancilla_population = [&] {
    double p = 0.0;
    for (BasisIndex i = 0; i < state.dimension(); ++i) {
      if ((i & ancillas) != 0) p += std::norm(state[i]);
    }
    return p;
  };
  if (ancilla_population() != 0.0) {
    throw Error(ErrorCode::kAncillaNotZeroed,
                "copy or sign register is not |0> before the term");
  }

  auto system_of = [&](BasisIndex i) { return i & sys; };
  auto copy_of = [&](BasisIndex i) { return (i & copy_mask) >> copy_shift; };

  // O_F: copy ^= y_x.
  StepTally of_step;
  permute(state, [&](BasisIndex i) {
    QueryCounter c;
    const BasisIndex y = g.partner(system_of(i), &c);
    of_step.record(c);
    return i ^ (y << copy_shift);
  });

  // O_H: sign ^= [sign(x, y) < 0], with y read from the copy register.
  StepTally oh_step;
  auto sign_flip = [&](StepTally& tally) {
    return [&](BasisIndex i) {
      QueryCounter c;
      const int s = g.sign(system_of(i), copy_of(i), &c);
      tally.record(c);
      return s < 0 ? i ^ sign_bit : i;
    };
  };
  permute(state, sign_flip(oh_step));

  // Phase G_{yx} = conj(G_{xy}): system x will be swapped into column y.
  const bool imaginary = g.phase_class() == PhaseClass::kImaginary;
  for (BasisIndex i = 0; i < state.dimension(); ++i) {
    if ((i & ctl) != ctl || state[i] == Complex{}) continue;
    const double s = (i & sign_bit) != 0 ? -1.0 : 1.0;
    const bool off_diagonal = system_of(i) != copy_of(i);
    state[i] *= imaginary && off_diagonal ? Complex{0.0, -s} : Complex{s, 0.0};
  }

  StepTally oh_inverse_step;
  permute(state, sign_flip(oh_inverse_step));

  // Controlled swap of system and copy registers.
  permute(state, [&](BasisIndex i) {
    if ((i & ctl) != ctl) return i;
    const BasisIndex x = system_of(i);
    const BasisIndex y = copy_of(i);
    return (i & ~(sys | copy_mask)) | y | (x << copy_shift);
  });

  // O_F^-1: copy ^= y(system), which clears it on both branches.
  StepTally of_inverse_step;
  permute(state, [&](BasisIndex i) {
    QueryCounter c;
    const BasisIndex y = g.partner(system_of(i), &c);
    of_inverse_step.record(c);
    return i ^ (y << copy_shift);
  });

  if (ancilla_population() != 0.0) {
    throw Error(ErrorCode::kAncillaResidue,
                "copy or sign register not restored after the term");
  }

  counter.of += 1;
  counter.oh += 1;
  counter.oh_inverse += 1;
  counter.of_inverse += 1;
  for (const StepTally* t : {&of_step, &oh_step, &oh_inverse_step, &of_inverse_step}) {
    counter.source_of += t->worst.source_of;
    counter.source_oh += t->worst.source_oh;
  }
}

}  // namespace svqe
