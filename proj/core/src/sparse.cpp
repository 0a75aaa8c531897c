// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "svqe/error.hpp"

namespace svqe {

QueryCounter& QueryCounter::operator+=(const QueryCounter& other) {
  of += other.of;
  oh += other.oh;
  of_inverse += other.of_inverse;
  oh_inverse += other.oh_inverse;
  source_of += other.source_of;
  source_oh += other.source_oh;
  return *this;
}

namespace {

void check_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 62) {
    throw Error(ErrorCode::kBadInput,
                "num_qubits must be in [1, 62], got " +
                    std::to_string(num_qubits));
  }
}

void check_finite(const Complex& v, BasisIndex x, BasisIndex y) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorCode::kBadInput, "non-finite entry at (" +
                                          std::to_string(x) + ", " +
                                          std::to_string(y) + ")");
  }
}

}  // namespace

SparseOracleMatrix::SparseOracleMatrix(int num_qubits, std::size_t sparsity,
                                       double max_norm, NeighborFn neighbor,
                                       EntryFn entry)
    : num_qubits_(num_qubits),
      sparsity_(sparsity),
      max_norm_(max_norm),
      neighbor_(std::move(neighbor)),
      entry_(std::move(entry)) {
  check_qubits(num_qubits);
  if (!(max_norm >= 0.0) || !std::isfinite(max_norm)) {
    throw Error(ErrorCode::kBadInput, "max_norm must be finite and >= 0");
  }
}

SparseOracleMatrix SparseOracleMatrix::from_upper_entries(
    int num_qubits,
    const std::vector<std::tuple<BasisIndex, BasisIndex, Complex>>& entries,
    std::optional<double> max_norm) {
  check_qubits(num_qubits);
  const BasisIndex dim = BasisIndex{1} << num_qubits;
  // Rows stay sorted by column, which is the O_F enumeration order.
  auto rows = std::make_shared<std::map<BasisIndex, std::map<BasisIndex, Complex>>>();
  double scanned = 0.0;
  for (const auto& [x, y, v] : entries) {
    if (x >= dim || y >= dim) {
      throw Error(ErrorCode::kBadInput, "index out of range at (" +
                                            std::to_string(x) + ", " +
                                            std::to_string(y) + ")");
    }
    if (x > y) {
      throw Error(ErrorCode::kBadInput,
                  "entries must satisfy x <= y, got (" + std::to_string(x) +
                      ", " + std::to_string(y) + ")");
    }
    check_finite(v, x, y);
    if (x == y && v.imag() != 0.0) {
      throw Error(ErrorCode::kNonHermitian,
                  "diagonal entry at " + std::to_string(x) + " is not real");
    }
    auto& row = (*rows)[x];
    if (row.count(y) != 0) {
      throw Error(ErrorCode::kBadInput, "duplicate entry (" +
                                            std::to_string(x) + ", " +
                                            std::to_string(y) + ")");
    }
    if (v == Complex{}) continue;
    row[y] = v;
    if (x != y) (*rows)[y][x] = std::conj(v);
    scanned = std::max(scanned, std::abs(v));
  }
  std::size_t sparsity = 0;
  for (auto it = rows->begin(); it != rows->end();) {
    if (it->second.empty()) {
      it = rows->erase(it);
    } else {
      sparsity = std::max(sparsity, it->second.size());
      ++it;
    }
  }
  if (max_norm && *max_norm < scanned) {
    throw Error(ErrorCode::kBadInput,
                "declared max_norm " + std::to_string(*max_norm) +
                    " is below the largest entry magnitude " +
                    std::to_string(scanned));
  }

  // Column lists per row for O(1) positional lookup.
  auto columns = std::make_shared<std::map<BasisIndex, std::vector<BasisIndex>>>();
  for (const auto& [x, row] : *rows) {
    auto& cols = (*columns)[x];
    for (const auto& [y, v] : row) cols.push_back(y);
  }

  NeighborFn neighbor = [columns](BasisIndex x,
                                  std::size_t i) -> std::optional<BasisIndex> {
    auto it = columns->find(x);
    if (it == columns->end() || i >= it->second.size()) return std::nullopt;
    return it->second[i];
  };
  EntryFn entry = [rows](BasisIndex x, BasisIndex y) -> Complex {
    auto it = rows->find(x);
    if (it == rows->end()) return {};
    auto jt = it->second.find(y);
    return jt == it->second.end() ? Complex{} : jt->second;
  };
  return SparseOracleMatrix(num_qubits, std::max<std::size_t>(sparsity, 1),
                            max_norm.value_or(scanned), std::move(neighbor),
                            std::move(entry));
}

std::optional<BasisIndex> SparseOracleMatrix::neighbor(
    BasisIndex x, std::size_t i, QueryCounter* counter) const {
  if (counter) ++counter->source_of;
  return neighbor_(x, i);
}

Complex SparseOracleMatrix::entry(BasisIndex x, BasisIndex y,
                                  QueryCounter* counter) const {
  if (counter) ++counter->source_oh;
  return entry_(x, y);
}

OneSparseHermitian::OneSparseHermitian(int num_qubits, double max_norm,
                                       PartnerFn partner, EntryFn entry)
    : num_qubits_(num_qubits),
      max_norm_(max_norm),
      partner_(std::move(partner)),
      entry_(std::move(entry)) {
  check_qubits(num_qubits);
  if (!(max_norm >= 0.0) || !std::isfinite(max_norm)) {
    throw Error(ErrorCode::kBadInput, "max_norm must be finite and >= 0");
  }
}

OneSparseHermitian OneSparseHermitian::from_pairs(
    int num_qubits,
    const std::vector<std::tuple<BasisIndex, BasisIndex, Complex>>& pairs) {
  check_qubits(num_qubits);
  const BasisIndex dim = BasisIndex{1} << num_qubits;
  auto partner = std::make_shared<std::map<BasisIndex, BasisIndex>>();
  auto value = std::make_shared<std::map<BasisIndex, Complex>>();
  double norm = 0.0;
  for (const auto& [x, y, v] : pairs) {
    if (x >= dim || y >= dim || x > y) {
      throw Error(ErrorCode::kBadInput,
                  "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") must satisfy x <= y < 2^n");
    }
    check_finite(v, x, y);
    if (partner->count(x) || partner->count(y)) {
      throw Error(ErrorCode::kNotOneSparse,
                  "row " + std::to_string(partner->count(x) ? x : y) +
                      " appears in two pairs");
    }
    (*partner)[x] = y;
    (*partner)[y] = x;
    (*value)[x] = v;
    (*value)[y] = std::conj(v);
    norm = std::max(norm, std::abs(v));
  }
  return OneSparseHermitian(
      num_qubits, norm,
      [partner](BasisIndex x, QueryCounter*) {
        auto it = partner->find(x);
        return it == partner->end() ? x : it->second;
      },
      [value](BasisIndex x, BasisIndex, QueryCounter*) {
        auto it = value->find(x);
        return it == value->end() ? Complex{} : it->second;
      });
}

SelfInverseTerm::SelfInverseTerm(int num_qubits, PartnerFn partner,
                                 SignFn sign, PhaseClass phase_class,
                                 int bit_index, Branch branch,
                                 std::shared_ptr<const OneSparseHermitian> parent,
                                 std::size_t piece)
    : num_qubits_(num_qubits),
      partner_(std::move(partner)),
      sign_(std::move(sign)),
      phase_class_(phase_class),
      bit_index_(bit_index),
      branch_(branch),
      parent_(std::move(parent)),
      piece_(piece) {
  check_qubits(num_qubits);
}

SelfInverseTerm SelfInverseTerm::from_tables(int num_qubits,
                                             std::vector<BasisIndex> partner,
                                             std::vector<int> sign,
                                             PhaseClass phase_class) {
  check_qubits(num_qubits);
  const BasisIndex dim = BasisIndex{1} << num_qubits;
  if (partner.size() != dim || sign.size() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partner and sign tables must have 2^n entries");
  }
  auto p = std::make_shared<const std::vector<BasisIndex>>(std::move(partner));
  auto s = std::make_shared<const std::vector<int>>(std::move(sign));
  return SelfInverseTerm(
      num_qubits, [p](BasisIndex x, QueryCounter*) { return (*p)[x]; },
      [s](BasisIndex x, BasisIndex, QueryCounter*) { return (*s)[x]; },
      phase_class);
}

Complex SelfInverseTerm::value(BasisIndex x, BasisIndex y,
                               QueryCounter* counter) const {
  const double s = sign(x, y, counter) < 0 ? -1.0 : 1.0;
  if (phase_class_ == PhaseClass::kImaginary && x != y) return {0.0, s};
  return {s, 0.0};
}

}  // namespace svqe
