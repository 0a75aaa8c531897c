// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermion.hpp
 * @brief Second-quantized fermionic operators on Fock occupation states.
 *
 * Mode p is bit p of the basis index (mode 0 least significant). A ladder
 * operator on mode p picks up (-1)^(number of occupied modes below p).
 * A monomial's ops are listed as written and act right to left.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "svqe/decompose.hpp"
#include "svqe/sparse.hpp"

namespace svqe {

struct FockState {
  int num_modes = 0;
  BasisIndex index = 0;

  static FockState from_occupations(const std::vector<int>& occupations);
  bool occupied(int mode) const { return ((index >> mode) & 1U) != 0; }
  friend bool operator==(const FockState&, const FockState&) = default;
};

struct LadderOp {
  enum class Kind { kCreate, kAnnihilate };
  Kind kind = Kind::kCreate;
  int mode = 0;

  static LadderOp create(int mode) { return {Kind::kCreate, mode}; }
  static LadderOp annihilate(int mode) { return {Kind::kAnnihilate, mode}; }
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

struct LadderMonomial {
  Complex coefficient{1.0, 0.0};
  std::vector<LadderOp> ops;

  /// Hermitian conjugate: conjugated coefficient, reversed and flipped ops.
  LadderMonomial adjoint() const;
  /// True when the op string equals its own conjugate string.
  bool self_adjoint_ops() const;
};

struct MonomialAction {
  Complex amplitude;
  FockState state;
};

/// Empty optional when some operator annihilates the state.
std::optional<MonomialAction> apply_monomial(const LadderMonomial& m,
                                             const FockState& s);

struct ConjugatePairTerm {
  LadderMonomial monomial;
  bool is_self_adjoint = false;
};

/// Groups a conjugation-closed monomial list into pairs (first occurrence is
/// the representative) and self-adjoint singletons.
std::vector<ConjugatePairTerm> build_pair_terms(
    const std::vector<LadderMonomial>& monomials);

/// One-sparse Hermitian operator of (monomial + adjoint), or of the monomial
/// alone when self-adjoint. Checked eagerly at desk scale.
std::shared_ptr<const OneSparseHermitian> pair_to_one_sparse(
    const ConjugatePairTerm& t, int num_modes);

/// Upper bound 2 N L on the monomial route's self-inverse term count.
std::size_t monomial_term_count(std::size_t num_monomials, double max_norm,
                                double gamma);

/// Bit decomposition of every pair term. The residual bound is the sum of
/// the per-pair bounds since pairs may share entries.
SelfInverseTermList decompose_monomials(const std::vector<ConjugatePairTerm>& pairs,
                                        int num_modes, double gamma);

/// The summed Hamiltonian as a generic sparse oracle (for the d-sparse route
/// and for verification). Row x's neighbors are the distinct targets of the
/// monomials acting on x, with cancelled entries dropped.
std::shared_ptr<const SparseOracleMatrix> monomial_hamiltonian(
    const std::vector<LadderMonomial>& monomials, int num_modes);

}  // namespace svqe
