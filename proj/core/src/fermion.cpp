// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <map>
#include <string>
#include <utility>

#include "svqe/error.hpp"

namespace svqe {

namespace {

void check_modes(int num_modes) {
  if (num_modes < 1 || num_modes > 62) {
    throw Error(ErrorCode::kBadInput, "num_modes must be in [1, 62]");
  }
}

bool coefficients_conjugate(Complex a, Complex b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - std::conj(b)) <= 1e-12 * scale;
}

std::string describe(std::size_t index) {
  return "monomial #" + std::to_string(index);
}

}  // namespace

FockState FockState::from_occupations(const std::vector<int>& occupations) {
  check_modes(static_cast<int>(occupations.size()));
  FockState s{static_cast<int>(occupations.size()), 0};
  for (std::size_t p = 0; p < occupations.size(); ++p) {
    if (occupations[p] != 0) s.index |= BasisIndex{1} << p;
  }
  return s;
}

LadderMonomial LadderMonomial::adjoint() const {
  LadderMonomial out{std::conj(coefficient), {}};
  out.ops.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.ops.push_back({it->kind == LadderOp::Kind::kCreate
                           ? LadderOp::Kind::kAnnihilate
                           : LadderOp::Kind::kCreate,
                       it->mode});
  }
  return out;
}

bool LadderMonomial::self_adjoint_ops() const { return adjoint().ops == ops; }

std::optional<MonomialAction> apply_monomial(const LadderMonomial& m,
                                             const FockState& s) {
  BasisIndex index = s.index;
  double phase = 1.0;
  for (auto it = m.ops.rbegin(); it != m.ops.rend(); ++it) {
    if (it->mode < 0 || it->mode >= s.num_modes) {
      throw Error(ErrorCode::kBadInput,
                  "ladder operator mode " + std::to_string(it->mode) +
                      " outside [0, " + std::to_string(s.num_modes) + ")");
    }
    const BasisIndex bit = BasisIndex{1} << it->mode;
    const bool occupied = (index & bit) != 0;
    if (occupied == (it->kind == LadderOp::Kind::kCreate)) return std::nullopt;
    if (std::popcount(index & (bit - 1)) % 2 != 0) phase = -phase;
    index ^= bit;
  }
  return MonomialAction{phase * m.coefficient, FockState{s.num_modes, index}};
}

std::vector<ConjugatePairTerm> build_pair_terms(
    const std::vector<LadderMonomial>& monomials) {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i].ops.empty()) {
      throw Error(ErrorCode::kBadInput, describe(i) + " has no operators");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (monomials[j].ops == monomials[i].ops) {
        throw Error(ErrorCode::kDuplicateMonomial,
                    describe(i) + " repeats " + describe(j));
      }
    }
  }

  std::vector<ConjugatePairTerm> out;
  std::vector<bool> used(monomials.size(), false);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (used[i]) continue;
    const LadderMonomial& m = monomials[i];
    used[i] = true;
    if (m.self_adjoint_ops()) {
      if (!coefficients_conjugate(m.coefficient, m.coefficient)) {
        throw Error(ErrorCode::kNotConjugateClosed,
                    describe(i) +
                        " is self-adjoint as an operator string but has a "
                        "complex coefficient");
      }
      out.push_back({m, true});
      continue;
    }
    const LadderMonomial adj = m.adjoint();
    auto match = std::find_if(monomials.begin(), monomials.end(),
                              [&](const LadderMonomial& other) {
                                return other.ops == adj.ops;
                              });
    if (match == monomials.end()) {
      throw Error(ErrorCode::kNotConjugateClosed,
                  describe(i) + " has no Hermitian conjugate in the list");
    }
    const auto j = static_cast<std::size_t>(match - monomials.begin());
    if (!coefficients_conjugate(match->coefficient, m.coefficient)) {
      throw Error(ErrorCode::kNotConjugateClosed,
                  describe(j) + " has the conjugate operator string of " +
                      describe(i) + " but not the conjugate coefficient");
    }
    used[j] = true;
    out.push_back({m, false});
  }
  return out;
}

namespace {

struct PairAction {
  BasisIndex target;
  Complex amplitude;  // <target| (m + m^dagger) |x>
};

std::optional<PairAction> pair_action(const LadderMonomial& m,
                                      const LadderMonomial& adj,
                                      bool self_adjoint, int num_modes,
                                      BasisIndex x) {
  const FockState s{num_modes, x};
  auto forward = apply_monomial(m, s);
  if (self_adjoint) {
    if (!forward) return std::nullopt;
    return PairAction{forward->state.index, forward->amplitude};
  }
  auto backward = apply_monomial(adj, s);
  if (forward && backward) {
    if (forward->state.index != backward->state.index) {
      throw Error(ErrorCode::kNotOneSparse,
                  "monomial and its conjugate both act on Fock state " +
                      std::to_string(x) + " with different targets");
    }
    return PairAction{forward->state.index,
                      forward->amplitude + backward->amplitude};
  }
  if (forward) return PairAction{forward->state.index, forward->amplitude};
  if (backward) return PairAction{backward->state.index, backward->amplitude};
  return std::nullopt;
}

}  // namespace

std::shared_ptr<const OneSparseHermitian> pair_to_one_sparse(
    const ConjugatePairTerm& t, int num_modes) {
  check_modes(num_modes);
  const LadderMonomial m = t.monomial;
  const LadderMonomial adj = m.adjoint();
  const bool self_adjoint = t.is_self_adjoint;

  if (num_modes <= kDeskScaleQubits) {
    const BasisIndex dim = BasisIndex{1} << num_modes;
    for (BasisIndex x = 0; x < dim; ++x) {
      auto a = pair_action(m, adj, self_adjoint, num_modes, x);
      if (!a) continue;
      auto back = pair_action(m, adj, self_adjoint, num_modes, a->target);
      if (!back || back->target != x) {
        throw Error(ErrorCode::kNotOneSparse,
                    "pair term does not map Fock state " +
                        std::to_string(a->target) + " back to " +
                        std::to_string(x));
      }
    }
  }

  auto partner = [m, adj, self_adjoint, num_modes](BasisIndex x,
                                                    QueryCounter*) {
    auto a = pair_action(m, adj, self_adjoint, num_modes, x);
    return a ? a->target : x;
  };
  // Row x holds <x|T|y> = conj(<y|T|x>) for the Hermitian T.
  auto entry = [m, adj, self_adjoint, num_modes](BasisIndex x, BasisIndex,
                                                  QueryCounter*) -> Complex {
    auto a = pair_action(m, adj, self_adjoint, num_modes, x);
    return a ? std::conj(a->amplitude) : Complex{};
  };
  return std::make_shared<const OneSparseHermitian>(
      num_modes, std::abs(m.coefficient), std::move(partner), std::move(entry));
}

std::size_t monomial_term_count(std::size_t num_monomials, double max_norm,
                                double gamma) {
  return 2 * num_monomials *
         static_cast<std::size_t>(choose_num_bits(max_norm, gamma));
}

SelfInverseTermList decompose_monomials(const std::vector<ConjugatePairTerm>& pairs,
                                        int num_modes, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "gamma must be a positive finite number");
  }
  SelfInverseTermList out;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto h = pair_to_one_sparse(pairs[p], num_modes);
    if (h->max_norm() == 0.0) continue;
    const int bits = choose_num_bits(h->max_norm(), gamma);
    auto terms = bit_decompose_one_sparse(h, bits, p);
    out.residual_error_bound += terms.residual_error_bound;
    for (auto& t : terms.terms) out.terms.push_back(std::move(t));
  }
  return out;
}

std::shared_ptr<const SparseOracleMatrix> monomial_hamiltonian(
    const std::vector<LadderMonomial>& monomials, int num_modes) {
  check_modes(num_modes);
  auto terms = std::make_shared<const std::vector<LadderMonomial>>(monomials);
  // Column -> <x|H|column> for row x.
  auto row_of = [terms, num_modes](BasisIndex x) {
    std::map<BasisIndex, Complex> row;
    for (const auto& m : *terms) {
      // <x|m|y> != 0 iff m^dagger maps x to y, with <x|m|y> = conj(amp).
      auto a = apply_monomial(m.adjoint(), FockState{num_modes, x});
      if (a) row[a->state.index] += std::conj(a->amplitude);
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == Complex{}; });
    return row;
  };

  std::size_t sparsity = std::max<std::size_t>(monomials.size(), 1);
  double max_norm = 0.0;
  if (num_modes <= kDeskScaleQubits) {
    sparsity = 1;
    const BasisIndex dim = BasisIndex{1} << num_modes;
    for (BasisIndex x = 0; x < dim; ++x) {
      const auto row = row_of(x);
      sparsity = std::max(sparsity, row.size());
      for (const auto& [y, v] : row) max_norm = std::max(max_norm, std::abs(v));
    }
  } else {
    for (const auto& m : monomials) max_norm += std::abs(m.coefficient);
  }

  auto neighbor = [row_of](BasisIndex x,
                           std::size_t i) -> std::optional<BasisIndex> {
    const auto row = row_of(x);
    if (i >= row.size()) return std::nullopt;
    return std::next(row.begin(), static_cast<std::ptrdiff_t>(i))->first;
  };
  auto entry = [row_of](BasisIndex x, BasisIndex y) -> Complex {
    const auto row = row_of(x);
    auto it = row.find(y);
    return it == row.end() ? Complex{} : it->second;
  };
  return std::make_shared<const SparseOracleMatrix>(
      num_modes, sparsity, max_norm, std::move(neighbor), std::move(entry));
}

}  // namespace svqe
