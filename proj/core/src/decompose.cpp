// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "svqe/error.hpp"

namespace svqe {

namespace {

// Bits beyond double precision carry no information.
constexpr int kMaxBits = 52;

void check_tolerance(double max_norm, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "gamma must be a positive finite number");
  }
  if (!(max_norm > 0.0) || !std::isfinite(max_norm)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "max_norm must be a positive finite number");
  }
}

int highest_differing_bit(BasisIndex x, BasisIndex y) {
  return static_cast<int>(std::bit_width(x ^ y)) - 1;
}

}  // namespace

double lambda_for(double max_norm) {
  if (!(max_norm > 0.0)) return 1.0;
  int exponent = 0;
  std::frexp(max_norm, &exponent);  // max_norm = m * 2^exponent, m in [0.5, 1)
  return std::ldexp(1.0, exponent);
}

int choose_num_bits(double max_norm, double gamma) {
  check_tolerance(max_norm, gamma);
  const double bits = std::ceil(std::log2(std::sqrt(2.0) * max_norm / gamma));
  return std::max(1, static_cast<int>(bits));
}

BitDecompositionPlan make_plan(double max_norm, double gamma) {
  return {lambda_for(max_norm), choose_num_bits(max_norm, gamma), gamma};
}

int magnitude_bit(double magnitude, int level, double lambda, int num_bits) {
  const auto top = (std::uint64_t{1} << num_bits) - 1;
  const double scaled = std::round(std::ldexp(magnitude / lambda, num_bits));
  const auto q = std::min(static_cast<std::uint64_t>(std::max(scaled, 0.0)), top);
  return static_cast<int>((q >> (num_bits - level)) & 1U);
}

int term_sign(Complex parent_entry, BasisIndex x, BasisIndex y,
              PhaseClass phase_class, int level, Branch branch, double lambda,
              int num_bits) {
  // Bits and signs always come from the upper-triangle entry.
  const Complex canonical = x <= y ? parent_entry : std::conj(parent_entry);
  const double part =
      phase_class == PhaseClass::kReal ? canonical.real() : canonical.imag();
  int sign = 0;
  if (magnitude_bit(std::abs(part), level, lambda, num_bits) != 0) {
    sign = part > 0.0 ? 1 : -1;
  } else {
    sign = branch == Branch::kPlus ? 1 : -1;
  }
  // i*s mirrors to -i*s below the diagonal.
  if (phase_class == PhaseClass::kImaginary && x > y) sign = -sign;
  return sign;
}

SelfInverseTermList bit_decompose_one_sparse(
    std::shared_ptr<const OneSparseHermitian> h, int num_bits,
    std::size_t piece) {
  if (!h) throw Error(ErrorCode::kBadInput, "null one-sparse operator");
  if (num_bits < 1 || num_bits > kMaxBits) {
    throw Error(ErrorCode::kInvalidTolerance,
                "number of bits must be in [1, " + std::to_string(kMaxBits) +
                    "], got " + std::to_string(num_bits));
  }
  const double lambda = lambda_for(h->max_norm());
  const int n = h->num_qubits();
  auto partner = [h](BasisIndex x, QueryCounter* c) { return h->partner(x, c); };

  SelfInverseTermList out;
  out.terms.reserve(4 * static_cast<std::size_t>(num_bits));
  for (int level = 1; level <= num_bits; ++level) {
    const double coefficient = std::ldexp(lambda, -(level + 1));
    for (PhaseClass cls : {PhaseClass::kReal, PhaseClass::kImaginary}) {
      for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
        auto sign = [h, cls, level, branch, lambda, num_bits](
                        BasisIndex x, BasisIndex y, QueryCounter* c) {
          return term_sign(h->entry(x, y, c), x, y, cls, level, branch, lambda,
                           num_bits);
        };
        out.terms.push_back(
            {coefficient, SelfInverseTerm(n, partner, std::move(sign), cls,
                                          level, branch, h, piece)});
      }
    }
  }
  out.residual_error_bound = std::sqrt(2.0) * std::ldexp(lambda, -num_bits);
  return out;
}

SignOracle::SignOracle(SelfInverseTerm term,
                       std::shared_ptr<const OneSparseHermitian> parent,
                       QueryCounter& counter)
    : term_(std::move(term)), parent_(std::move(parent)), counter_(&counter) {}

int SignOracle::operator()(BasisIndex x, BasisIndex y) const {
  // Compute H^(1)_xy into a scratch register, flip the sign qubit from its
  // sign and bit-l qubits, then uncompute the scratch register.
  ++counter_->oh;
  const int sign = term_.sign(x, y, counter_);
  ++counter_->oh;
  parent_->entry(x, y, counter_);
  return sign;
}

SignOracle synthesize_oh(const SelfInverseTerm& g,
                         const std::shared_ptr<const OneSparseHermitian>& parent,
                         QueryCounter& counter) {
  if (!parent || g.parent().get() != parent.get()) {
    throw Error(ErrorCode::kMismatchedParent,
                "term was not produced from the given one-sparse operator");
  }
  return SignOracle(g, parent, counter);
}

namespace {

using Source = std::shared_ptr<const SparseOracleMatrix>;

std::shared_ptr<const OneSparseHermitian> diagonal_piece(const Source& h) {
  return std::make_shared<const OneSparseHermitian>(
      h->num_qubits(), h->max_norm(),
      [](BasisIndex x, QueryCounter*) { return x; },
      [h](BasisIndex x, BasisIndex, QueryCounter* c) { return h->entry(x, x, c); });
}

// Off-diagonal pairs {x, y} where y is x's a-th neighbor and x is y's a-th.
std::shared_ptr<const OneSparseHermitian> matched_piece(const Source& h,
                                                        std::size_t a) {
  auto partner = [h, a](BasisIndex x, QueryCounter* c) -> BasisIndex {
    const auto y = h->neighbor(x, a, c);
    if (!y || *y == x) return x;
    const auto back = h->neighbor(*y, a, c);
    return back && *back == x ? *y : x;
  };
  auto entry = [h](BasisIndex x, BasisIndex y, QueryCounter* c) -> Complex {
    return x == y ? Complex{} : h->entry(x, y, c);
  };
  return std::make_shared<const OneSparseHermitian>(
      h->num_qubits(), h->max_norm(), std::move(partner), std::move(entry));
}

// Pairs {x < y} with y = x's a-th neighbor, x = y's b-th neighbor and
// highest differing bit k. Bit k of a row is 0 exactly on the smaller end.
std::shared_ptr<const OneSparseHermitian> split_piece(const Source& h,
                                                      std::size_t a,
                                                      std::size_t b, int k) {
  auto partner = [h, a, b, k](BasisIndex x, QueryCounter* c) -> BasisIndex {
    const bool larger = ((x >> k) & 1U) != 0;
    const auto y = h->neighbor(x, larger ? b : a, c);
    if (!y || *y == x || highest_differing_bit(x, *y) != k) return x;
    const auto back = h->neighbor(*y, larger ? a : b, c);
    return back && *back == x ? *y : x;
  };
  auto entry = [h](BasisIndex x, BasisIndex y, QueryCounter* c) -> Complex {
    return x == y ? Complex{} : h->entry(x, y, c);
  };
  return std::make_shared<const OneSparseHermitian>(
      h->num_qubits(), h->max_norm(), std::move(partner), std::move(entry));
}

std::size_t position_in_row(const SparseOracleMatrix& h, BasisIndex row,
                            BasisIndex column) {
  for (std::size_t i = 0; i < h.sparsity(); ++i) {
    const auto y = h.neighbor(row, i);
    if (!y) break;
    if (*y == column) return i;
  }
  throw Error(ErrorCode::kNonHermitian,
              "column " + std::to_string(column) + " is missing from row " +
                  std::to_string(row) + "'s neighbor list");
}

}  // namespace

ColorDecomposition color_decompose(std::shared_ptr<const SparseOracleMatrix> h) {
  if (!h) throw Error(ErrorCode::kBadInput, "null sparse operator");
  const std::size_t d = h->sparsity();
  const int n = h->num_qubits();

  bool has_diagonal = false;
  std::set<std::size_t> matched;
  std::set<std::tuple<std::size_t, std::size_t, int>> split;
  if (n <= kDeskScaleQubits) {
    // Scan once so only nonempty pieces are emitted.
    const BasisIndex dim = h->dimension();
    for (BasisIndex x = 0; x < dim; ++x) {
      for (std::size_t a = 0; a < d; ++a) {
        const auto y = h->neighbor(x, a);
        if (!y) break;
        if (*y == x) {
          has_diagonal = true;
          continue;
        }
        if (*y < x) continue;
        const std::size_t b = position_in_row(*h, *y, x);
        if (a == b) {
          matched.insert(a);
        } else {
          split.insert({a, b, highest_differing_bit(x, *y)});
        }
      }
    }
  } else {
    has_diagonal = true;
    for (std::size_t a = 0; a < d; ++a) {
      matched.insert(a);
      for (std::size_t b = 0; b < d; ++b) {
        if (a == b) continue;
        for (int k = 0; k < n; ++k) split.insert({a, b, k});
      }
    }
  }

  ColorDecomposition out;
  out.sparsity = d;
  auto add = [&out](std::shared_ptr<const OneSparseHermitian> piece,
                    PieceLabel label) {
    out.pieces.terms.push_back({1.0, std::move(piece)});
    out.labels.push_back(label);
  };
  if (has_diagonal) add(diagonal_piece(h), {PieceLabel::Kind::kDiagonal, 0, 0, -1});
  for (std::size_t a : matched) {
    add(matched_piece(h, a), {PieceLabel::Kind::kMatched, a, a, -1});
  }
  for (const auto& [a, b, k] : split) {
    add(split_piece(h, a, b, k), {PieceLabel::Kind::kSplit, a, b, k});
  }
  out.fallback_split_used = !split.empty();
  out.pieces.residual_error_bound = 0.0;
  return out;
}

SparseDecomposition decompose_sparse(std::shared_ptr<const SparseOracleMatrix> h,
                                     double gamma) {
  if (!h) throw Error(ErrorCode::kBadInput, "null sparse operator");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "gamma must be a positive finite number");
  }
  SparseDecomposition out;
  if (h->max_norm() == 0.0) {
    out.plan = {1.0, 1, gamma};
    return out;
  }
  out.plan = make_plan(h->max_norm(), gamma);
  auto colored = color_decompose(h);
  out.num_pieces = colored.pieces.size();
  out.fallback_split_used = colored.fallback_split_used;
  for (std::size_t p = 0; p < colored.pieces.size(); ++p) {
    auto terms = bit_decompose_one_sparse(colored.pieces.terms[p].term,
                                          out.plan.num_bits, p);
    // Pieces have disjoint supports, so the entrywise bound does not add up.
    out.terms.residual_error_bound =
        std::max(out.terms.residual_error_bound, terms.residual_error_bound);
    for (auto& t : terms.terms) out.terms.terms.push_back(std::move(t));
  }
  return out;
}

std::size_t generic_term_count(std::size_t sparsity, double max_norm,
                               double gamma) {
  return 4 * sparsity * sparsity *
         static_cast<std::size_t>(choose_num_bits(max_norm, gamma));
}

}  // namespace svqe
