// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/dense.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "svqe/error.hpp"

namespace svqe {

namespace {

Eigen::Index guarded_dimension(int num_qubits) {
  if (num_qubits > kDeskScaleQubits) {
    throw Error(ErrorCode::kDimensionTooLarge,
                std::to_string(num_qubits) + " qubits exceeds the " +
                    std::to_string(kDeskScaleQubits) +
                    "-qubit verification limit");
  }
  return Eigen::Index{1} << num_qubits;
}

bool finite(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

class Checker {
 public:
  explicit Checker(std::string name) { check_.name = std::move(name); }

  /// Records the first failure only.
  void fail(BasisIndex x, std::string detail) {
    if (!check_.passed) return;
    check_.passed = false;
    check_.counterexample = x;
    check_.detail = std::move(detail);
  }
  bool passed() const { return check_.passed; }
  InvariantCheck take() { return std::move(check_); }

 private:
  InvariantCheck check_;
};

std::string pair_text(BasisIndex x, BasisIndex y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

DenseMatrix reconstruct_dense(const SparseOracleMatrix& m) {
  const Eigen::Index dim = guarded_dimension(m.num_qubits());
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (std::size_t i = 0;; ++i) {
      auto y = m.neighbor(static_cast<BasisIndex>(x), i);
      if (!y) break;
      out(x, static_cast<Eigen::Index>(*y)) =
          m.entry(static_cast<BasisIndex>(x), *y);
    }
  }
  return out;
}

DenseMatrix reconstruct_dense(const OneSparseHermitian& m) {
  const Eigen::Index dim = guarded_dimension(m.num_qubits());
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const BasisIndex y = m.partner(static_cast<BasisIndex>(x));
    out(x, static_cast<Eigen::Index>(y)) = m.entry(static_cast<BasisIndex>(x), y);
  }
  return out;
}

DenseMatrix reconstruct_dense(const SelfInverseTerm& m) {
  const Eigen::Index dim = guarded_dimension(m.num_qubits());
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const BasisIndex y = m.partner(static_cast<BasisIndex>(x));
    out(x, static_cast<Eigen::Index>(y)) = m.value(static_cast<BasisIndex>(x), y);
  }
  return out;
}

double max_norm_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double reconstruction_error(const SelfInverseTermList& terms,
                            const SparseOracleMatrix& h) {
  guarded_dimension(h.num_qubits());
  for (const auto& t : terms.terms) {
    if (t.term.num_qubits() != h.num_qubits()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "term and operator act on different registers");
    }
  }
  double worst = 0.0;
  std::map<BasisIndex, Complex> row;
  for (BasisIndex x = 0; x < h.dimension(); ++x) {
    row.clear();
    for (std::size_t i = 0; i < h.sparsity(); ++i) {
      const auto y = h.neighbor(x, i);
      if (!y) break;
      row[*y] -= h.entry(x, *y);
    }
    for (const auto& [alpha, g] : terms.terms) {
      const BasisIndex y = g.partner(x);
      row[y] += alpha * g.value(x, y);
    }
    for (const auto& [y, v] : row) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const InvariantCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidationReport validate(const SparseOracleMatrix& m) {
  const auto dim = static_cast<BasisIndex>(guarded_dimension(m.num_qubits()));
  Checker hermitian("hermiticity");
  Checker enumeration("neighbor_enumeration");
  Checker sparsity("sparsity");
  Checker norm("max_norm");
  Checker finiteness("finite");

  for (BasisIndex x = 0; x < dim; ++x) {
    std::size_t nonzeros = 0;
    std::size_t i = 0;
    std::optional<BasisIndex> previous;
    for (BasisIndex y = 0; y < dim; ++y) {
      const Complex v = m.entry(x, y);
      if (!finite(v)) finiteness.fail(x, "non-finite entry at " + pair_text(x, y));
      if (v != std::conj(m.entry(y, x))) {
        hermitian.fail(x, "entry " + pair_text(x, y) +
                              " is not the conjugate of its mirror");
      }
      if (std::abs(v) > m.max_norm()) {
        norm.fail(x, "|entry " + pair_text(x, y) + "| exceeds max_norm");
      }
      if (v == Complex{}) continue;
      ++nonzeros;
      // The i-th enumerated neighbor must be exactly this column.
      auto listed = m.neighbor(x, i++);
      if (!listed || *listed != y) {
        enumeration.fail(x, "neighbor " + std::to_string(i - 1) + " of row " +
                                std::to_string(x) + " should be column " +
                                std::to_string(y));
      }
      if (previous && listed && *listed <= *previous) {
        enumeration.fail(x, "neighbors of row " + std::to_string(x) +
                                " are not strictly increasing");
      }
      if (listed) previous = listed;
    }
    if (m.neighbor(x, i)) {
      enumeration.fail(x, "row " + std::to_string(x) +
                              " enumerates more neighbors than nonzeros");
    }
    if (nonzeros > m.sparsity()) {
      sparsity.fail(x, "row " + std::to_string(x) + " has " +
                           std::to_string(nonzeros) + " nonzeros > d = " +
                           std::to_string(m.sparsity()));
    }
  }
  return {{hermitian.take(), enumeration.take(), sparsity.take(), norm.take(),
           finiteness.take()}};
}

ValidationReport validate(const OneSparseHermitian& m) {
  const auto dim = static_cast<BasisIndex>(guarded_dimension(m.num_qubits()));
  Checker involution("involution");
  Checker hermitian("hermiticity");
  Checker one_sparse("one_sparse");
  Checker norm("max_norm");
  Checker finiteness("finite");

  std::vector<int> column_hits(dim, 0);
  for (BasisIndex x = 0; x < dim; ++x) {
    const BasisIndex y = m.partner(x);
    if (y >= dim) {
      involution.fail(x, "partner of " + std::to_string(x) + " is out of range");
      continue;
    }
    const Complex v = m.entry(x, y);
    if (!finite(v)) finiteness.fail(x, "non-finite entry at " + pair_text(x, y));
    if (std::abs(v) > m.max_norm()) {
      norm.fail(x, "|entry " + pair_text(x, y) + "| exceeds max_norm");
    }
    if (v != Complex{} && ++column_hits[y] > 1) {
      one_sparse.fail(x, "column " + std::to_string(y) +
                             " holds more than one nonzero");
    }
    const BasisIndex back = m.partner(y);
    if (back != x) {
      involution.fail(x, "partner(partner(" + std::to_string(x) + ")) = " +
                             std::to_string(back));
      continue;
    }
    if (v != std::conj(m.entry(y, x))) {
      hermitian.fail(x, "entry " + pair_text(x, y) +
                            " is not the conjugate of its mirror");
    }
  }
  return {{involution.take(), hermitian.take(), one_sparse.take(), norm.take(),
           finiteness.take()}};
}

ValidationReport validate(const SelfInverseTerm& m) {
  const auto dim = static_cast<BasisIndex>(guarded_dimension(m.num_qubits()));
  Checker involution("involution");
  Checker signs("sign_values");
  Checker hermitian("hermiticity");
  Checker self_inverse("self_inverse");

  for (BasisIndex x = 0; x < dim; ++x) {
    const BasisIndex y = m.partner(x);
    if (y >= dim) {
      involution.fail(x, "partner of " + std::to_string(x) + " is out of range");
      continue;
    }
    const int s = m.sign(x, y);
    if (s != 1 && s != -1) {
      signs.fail(x, "sign(" + std::to_string(x) + ") = " + std::to_string(s));
    }
    if (m.partner(y) != x) {
      involution.fail(x, "partner(partner(" + std::to_string(x) + ")) = " +
                             std::to_string(m.partner(y)));
      continue;
    }
    const Complex forward = m.value(x, y);
    const Complex backward = m.value(y, x);
    if (forward != std::conj(backward)) {
      hermitian.fail(x, "entry " + pair_text(x, y) +
                            " is not the conjugate of its mirror");
    }
    if (forward * backward != Complex{1.0, 0.0}) {
      self_inverse.fail(x, "G^2 differs from the identity in row " +
                               std::to_string(x));
    }
  }
  return {{involution.take(), signs.take(), hermitian.take(),
           self_inverse.take()}};
}

}  // namespace svqe
