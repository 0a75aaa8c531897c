// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file decompose.hpp
 * @brief Sparse Hermitian operator -> one-sparse pieces -> self-inverse terms.
 *
 * Two stages:
 *
 *  - color_decompose() splits a d-sparse operator into one-sparse Hermitian
 *    pieces. The entry pair {x, y} (x <= y) is colored by (a, b), where y is
 *    the a-th neighbor of x and x the b-th neighbor of y. All diagonal
 *    entries go to one dedicated piece. Off-diagonal classes with a == b are
 *    one-sparse as they stand. Classes with a != b may chain, so they are
 *    split by the highest bit k in which x and y differ; a row's bit k then
 *    tells it which endpoint it is, and each partner lookup needs at most
 *    two neighbor queries.
 *
 *  - bit_decompose_one_sparse() writes each real and imaginary part as an
 *    L-bit binary expansion in units of Lambda/2^l and turns each bit level
 *    into a PLUS/MINUS pair of +-1 (or +-i) valued self-inverse terms whose
 *    average reproduces the bit matrix.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "svqe/sparse.hpp"

namespace svqe {

struct BitDecompositionPlan {
  double lambda = 1.0;  ///< least power of two strictly above max_norm
  int num_bits = 1;
  double target_error = 0.0;  ///< 0 when L was given directly
};

/// Least power of two strictly greater than max_norm (1 for a zero operator).
double lambda_for(double max_norm);

/// L = ceil(log2(sqrt(2) * max_norm / gamma)), at least 1.
int choose_num_bits(double max_norm, double gamma);

BitDecompositionPlan make_plan(double max_norm, double gamma);

template <class Term>
struct Weighted {
  double coefficient = 0.0;
  Term term;
};

template <class Term>
struct WeightedTermList {
  std::vector<Weighted<Term>> terms;
  double residual_error_bound = 0.0;  ///< in max-norm

  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
};

using SelfInverseTermList = WeightedTermList<SelfInverseTerm>;
using OneSparseTermList =
    WeightedTermList<std::shared_ptr<const OneSparseHermitian>>;

/// Bit value (0/1) of level l in the L-bit expansion of a magnitude.
/// The magnitude is rounded to the nearest multiple of lambda/2^L and
/// saturates at the largest representable value.
int magnitude_bit(double magnitude, int level, double lambda, int num_bits);

/// Sign rule shared by the term oracles and the O_H synthesis: the sign of
/// G^{class,l,branch} at (x, y) given the parent entry value there.
int term_sign(Complex parent_entry, BasisIndex x, BasisIndex y,
              PhaseClass phase_class, int level, Branch branch, double lambda,
              int num_bits);

/// Exactly 4L terms, coefficient lambda/2^(l+1) each, ordered by level then
/// (REAL+, REAL-, IMAG+, IMAG-). Bound sqrt(2)*lambda/2^L.
SelfInverseTermList bit_decompose_one_sparse(
    std::shared_ptr<const OneSparseHermitian> h, int num_bits,
    std::size_t piece = 0);

/// O_H oracle of a self-inverse term built from two parent O_H queries
/// (compute, uncompute); each call adds 2 to counter.oh.
class SignOracle {
 public:
  SignOracle(SelfInverseTerm term, std::shared_ptr<const OneSparseHermitian> parent,
             QueryCounter& counter);

  int operator()(BasisIndex x, BasisIndex y) const;

 private:
  SelfInverseTerm term_;
  std::shared_ptr<const OneSparseHermitian> parent_;
  QueryCounter* counter_;
};

/// Throws MISMATCHED_PARENT unless g was produced from parent.
SignOracle synthesize_oh(const SelfInverseTerm& g,
                         const std::shared_ptr<const OneSparseHermitian>& parent,
                         QueryCounter& counter);

struct PieceLabel {
  enum class Kind { kDiagonal, kMatched, kSplit };
  Kind kind = Kind::kDiagonal;
  std::size_t a = 0;
  std::size_t b = 0;
  int split_bit = -1;
};

struct ColorDecomposition {
  OneSparseTermList pieces;  ///< unit coefficients, exact (bound 0)
  std::vector<PieceLabel> labels;
  bool fallback_split_used = false;
  std::size_t sparsity = 0;

  bool within_d_squared() const { return pieces.size() <= sparsity * sparsity; }
};

/// Pieces whose partner costs <= 2 source O_F queries and whose entry costs
/// <= 1 source O_H query. At desk scale empty pieces are dropped.
ColorDecomposition color_decompose(std::shared_ptr<const SparseOracleMatrix> h);

struct SparseDecomposition {
  SelfInverseTermList terms;
  BitDecompositionPlan plan;
  std::size_t num_pieces = 0;
  bool fallback_split_used = false;
};

/// color_decompose followed by bit_decompose_one_sparse on each piece with
/// L = choose_num_bits(max_norm, gamma).
SparseDecomposition decompose_sparse(std::shared_ptr<const SparseOracleMatrix> h,
                                     double gamma);

/// Upper bound 4 d^2 L on the generic route's term count.
std::size_t generic_term_count(std::size_t sparsity, double max_norm,
                               double gamma);

}  // namespace svqe
