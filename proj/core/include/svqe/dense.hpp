// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dense.hpp
 * @brief Desk-scale dense reconstruction and invariant validation.
 *
 * These are verification tools: they sweep every basis state, so they are
 * limited to kDeskScaleQubits and throw DIMENSION_TOO_LARGE beyond it.
 */

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "svqe/decompose.hpp"
#include "svqe/sparse.hpp"

namespace svqe {

using DenseMatrix = Eigen::MatrixXcd;

DenseMatrix reconstruct_dense(const SparseOracleMatrix& m);
DenseMatrix reconstruct_dense(const OneSparseHermitian& m);
DenseMatrix reconstruct_dense(const SelfInverseTerm& m);

/// Largest entrywise magnitude of a - b.
double max_norm_distance(const DenseMatrix& a, const DenseMatrix& b);

/// max |(sum_j alpha_j G_j - H)_xy| accumulated row by row, without forming
/// dense matrices. Desk scale only.
double reconstruction_error(const SelfInverseTermList& terms,
                            const SparseOracleMatrix& h);

struct InvariantCheck {
  std::string name;
  bool passed = true;
  std::optional<BasisIndex> counterexample;
  std::string detail;
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;

  bool ok() const;
  const InvariantCheck* find(const std::string& name) const;
};

ValidationReport validate(const SparseOracleMatrix& m);
ValidationReport validate(const OneSparseHermitian& m);
ValidationReport validate(const SelfInverseTerm& m);

}  // namespace svqe
