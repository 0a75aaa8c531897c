// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sparse.hpp
 * @brief Oracle-defined sparse Hermitian operators and their one-sparse and
 *        self-inverse building blocks.
 *
 * Operators are never stored densely. A d-sparse operator is given by a
 * neighbor oracle (O_F: i-th nonzero column of row x) and an entry oracle
 * (O_H: value at (x, y)). One-sparse operators replace O_F by a partner map
 * x -> y_x that is an involution. Every oracle accepts an optional
 * QueryCounter through which it reports the calls it makes to the oracles of
 * the operator it was derived from.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

namespace svqe {

using BasisIndex = std::uint64_t;
using Complex = std::complex<double>;

/// Largest register for which dense verification utilities run.
inline constexpr int kDeskScaleQubits = 12;

/**
 * Oracle call tally for one term application.
 *
 * The first four fields count calls made against a one-sparse operator
 * H^(1) (forward and inverse separately). The source_* fields count the
 * calls those in turn made against the d-sparse operator H^(1) was cut
 * from; they stay zero when H^(1) is native (e.g. a fermionic pair).
 */
struct QueryCounter {
  std::uint64_t of = 0;
  std::uint64_t oh = 0;
  std::uint64_t of_inverse = 0;
  std::uint64_t oh_inverse = 0;
  std::uint64_t source_of = 0;
  std::uint64_t source_oh = 0;

  std::uint64_t one_sparse_total() const {
    return of + oh + of_inverse + oh_inverse;
  }
  std::uint64_t source_total() const { return source_of + source_oh; }

  QueryCounter& operator+=(const QueryCounter& other);
  friend bool operator==(const QueryCounter&, const QueryCounter&) = default;
};

/// Hermitian d-sparse operator accessed only through its O_F / O_H oracles.
class SparseOracleMatrix {
 public:
  using NeighborFn =
      std::function<std::optional<BasisIndex>(BasisIndex, std::size_t)>;
  using EntryFn = std::function<Complex(BasisIndex, BasisIndex)>;

  SparseOracleMatrix(int num_qubits, std::size_t sparsity, double max_norm,
                     NeighborFn neighbor, EntryFn entry);

  /// Table-backed oracle from upper-triangle entries (x <= y); the mirror
  /// (y, x) is implied. Exact zeros are dropped.
  static SparseOracleMatrix from_upper_entries(
      int num_qubits,
      const std::vector<std::tuple<BasisIndex, BasisIndex, Complex>>& entries,
      std::optional<double> max_norm = std::nullopt);

  int num_qubits() const { return num_qubits_; }
  BasisIndex dimension() const { return BasisIndex{1} << num_qubits_; }
  std::size_t sparsity() const { return sparsity_; }
  double max_norm() const { return max_norm_; }

  /// O_F: column of the i-th nonzero entry in row x, ascending.
  std::optional<BasisIndex> neighbor(BasisIndex x, std::size_t i,
                                     QueryCounter* counter = nullptr) const;
  /// O_H: value of entry (x, y).
  Complex entry(BasisIndex x, BasisIndex y,
                QueryCounter* counter = nullptr) const;

 private:
  int num_qubits_;
  std::size_t sparsity_;
  double max_norm_;
  NeighborFn neighbor_;
  EntryFn entry_;
};

/// One-sparse Hermitian operator: row x holds at most the entry (x, y_x).
class OneSparseHermitian {
 public:
  using PartnerFn = std::function<BasisIndex(BasisIndex, QueryCounter*)>;
  /// Value at (x, y) where the caller guarantees y = partner(x).
  using EntryFn = std::function<Complex(BasisIndex, BasisIndex, QueryCounter*)>;

  OneSparseHermitian(int num_qubits, double max_norm, PartnerFn partner,
                     EntryFn entry);

  /// Table-backed operator from (x, y, value) triples with x <= y; rows not
  /// mentioned map to themselves with value zero.
  static OneSparseHermitian from_pairs(
      int num_qubits,
      const std::vector<std::tuple<BasisIndex, BasisIndex, Complex>>& pairs);

  int num_qubits() const { return num_qubits_; }
  BasisIndex dimension() const { return BasisIndex{1} << num_qubits_; }
  double max_norm() const { return max_norm_; }

  BasisIndex partner(BasisIndex x, QueryCounter* counter = nullptr) const {
    return partner_(x, counter);
  }
  Complex entry(BasisIndex x, BasisIndex y,
                QueryCounter* counter = nullptr) const {
    return entry_(x, y, counter);
  }
  /// Uncounted convenience: entry at (x, partner(x)).
  Complex value(BasisIndex x) const { return entry(x, partner(x)); }

 private:
  int num_qubits_;
  double max_norm_;
  PartnerFn partner_;
  EntryFn entry_;
};

enum class PhaseClass { kReal, kImaginary };
enum class Branch { kPlus, kMinus };

/**
 * One-sparse, Hermitian, self-inverse term G with entries in {±1, ±i}.
 *
 * REAL terms carry sign(x) at (x, y_x). IMAGINARY terms carry sign(x)·i
 * off the diagonal and the real sign(x) on it.
 */
class SelfInverseTerm {
 public:
  using PartnerFn = OneSparseHermitian::PartnerFn;
  /// Sign of entry (x, y) with y = partner(x); returns +1 or -1.
  using SignFn = std::function<int(BasisIndex, BasisIndex, QueryCounter*)>;

  SelfInverseTerm(int num_qubits, PartnerFn partner, SignFn sign,
                  PhaseClass phase_class, int bit_index = 1,
                  Branch branch = Branch::kPlus,
                  std::shared_ptr<const OneSparseHermitian> parent = nullptr,
                  std::size_t piece = 0);

  /// Table-backed term, mostly for tests and Pauli-like operators.
  static SelfInverseTerm from_tables(int num_qubits,
                                     std::vector<BasisIndex> partner,
                                     std::vector<int> sign,
                                     PhaseClass phase_class);

  int num_qubits() const { return num_qubits_; }
  BasisIndex dimension() const { return BasisIndex{1} << num_qubits_; }
  PhaseClass phase_class() const { return phase_class_; }
  int bit_index() const { return bit_index_; }
  Branch branch() const { return branch_; }
  std::size_t piece() const { return piece_; }
  const std::shared_ptr<const OneSparseHermitian>& parent() const {
    return parent_;
  }
  const PartnerFn& partner_fn() const { return partner_; }

  BasisIndex partner(BasisIndex x, QueryCounter* counter = nullptr) const {
    return partner_(x, counter);
  }
  int sign(BasisIndex x, BasisIndex y, QueryCounter* counter = nullptr) const {
    return sign_(x, y, counter);
  }
  /// Matrix element (x, y) given y = partner(x).
  Complex value(BasisIndex x, BasisIndex y,
                QueryCounter* counter = nullptr) const;
  /// Uncounted convenience: entry at (x, partner(x)).
  Complex value(BasisIndex x) const { return value(x, partner(x)); }

 private:
  int num_qubits_;
  PartnerFn partner_;
  SignFn sign_;
  PhaseClass phase_class_;
  int bit_index_;
  Branch branch_;
  std::shared_ptr<const OneSparseHermitian> parent_;
  std::size_t piece_;
};

}  // namespace svqe
