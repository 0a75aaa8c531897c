// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON input formats.
 *
 * COO:       {"num_qubits": n, "max_norm": optional, "entries": [[x, y, re, im], ...]}
 *            upper triangle only (x <= y).
 * Monomials: {"num_modes": M, "terms": [{"coeff": [re, im],
 *            "ops": [["+", p], ["-", q], ...]}, ...]}
 * Template:  {"layers": k, "entangler": "cnot_ring" | "cz_line",
 *            "rotations": ["ry", "rz"]}
 *
 * Every parser throws Error(BAD_INPUT) naming the first offending element;
 * semantic violations keep their own codes (NON_HERMITIAN, ...).
 */

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "svqe/circuit.hpp"
#include "svqe/fermion.hpp"
#include "svqe/sparse.hpp"

namespace svqe {

struct CooMatrix {
  int num_qubits = 0;
  std::vector<std::tuple<BasisIndex, BasisIndex, Complex>> entries;
  std::optional<double> max_norm;

  std::shared_ptr<const SparseOracleMatrix> to_oracle() const;
};

struct MonomialSystem {
  int num_modes = 0;
  std::vector<LadderMonomial> monomials;
};

enum class InputKind { kCoo, kMonomials };

InputKind detect_input_kind(const std::string& text);
CooMatrix parse_coo(const std::string& text);
MonomialSystem parse_monomials(const std::string& text);
AnsatzTemplate parse_ansatz_template(const std::string& text);

/// Whole file as a string; BAD_INPUT when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace svqe
