// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "svqe/dense.hpp"
#include "svqe/error.hpp"
#include "svqe/fermion.hpp"
#include "test_support.hpp"

namespace svqe {
namespace {

using testing::Dense;
using Op = LadderOp;

LadderMonomial mono(Complex c, std::vector<LadderOp> ops) { return {c, std::move(ops)}; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kBadInput;
}

// Dense matrix of a monomial from its action on every Fock state.
Dense action_matrix(const LadderMonomial& m, int modes) {
  const auto dim = static_cast<Eigen::Index>(1) << modes;
  Dense out = Dense::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    if (auto a = apply_monomial(m, {modes, static_cast<BasisIndex>(x)})) {
      out(static_cast<Eigen::Index>(a->state.index), x) += a->amplitude;
    }
  }
  return out;
}

TEST(ApplyMonomial, LoneCreation) {
  const auto r = apply_monomial(mono(1.0, {Op::create(0)}), {1, 0});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->amplitude, Complex(1, 0));
  EXPECT_EQ(r->state.index, 1U);
}

TEST(ApplyMonomial, HoppingSign) {
  // a0^dagger a1 on (mode0 = 0, mode1 = 1) -> (1, 0) with net +1.
  const auto s = FockState::from_occupations({0, 1});
  const auto r = apply_monomial(mono(1.0, {Op::create(0), Op::annihilate(1)}), s);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->amplitude, Complex(1, 0));
  EXPECT_EQ(r->state, FockState::from_occupations({1, 0}));
}

TEST(ApplyMonomial, SignCountsOccupiedModesBelow) {
  // a1^dagger on |mode0 = 1> picks up -1.
  const auto r = apply_monomial(mono(1.0, {Op::create(1)}), FockState::from_occupations({1, 0}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->amplitude, Complex(-1, 0));
}

TEST(ApplyMonomial, AnnihilatingVacuum) {
  EXPECT_FALSE(apply_monomial(mono(1.0, {Op::annihilate(0)}), {1, 0}).has_value());
}

TEST(ApplyMonomial, MatchesJordanWigner) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> mode(0, 3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    LadderMonomial m{{0.3, -0.7}, {}};
    const int len = 1 + trial % 4;
    for (int k = 0; k < len; ++k) {
      m.ops.push_back(coin(rng) ? Op::create(mode(rng)) : Op::annihilate(mode(rng)));
    }
    EXPECT_TRUE(action_matrix(m, 4).isApprox(testing::jw_monomial(4, m), 1e-14) ||
                (action_matrix(m, 4) - testing::jw_monomial(4, m)).norm() == 0.0);
  }
}

TEST(BuildPairTerms, Examples) {
  const auto hop = build_pair_terms({mono(1.0, {Op::create(0), Op::annihilate(1)}),
                                     mono(1.0, {Op::create(1), Op::annihilate(0)})});
  ASSERT_EQ(hop.size(), 1U);
  EXPECT_FALSE(hop[0].is_self_adjoint);

  const auto number = build_pair_terms({mono(0.5, {Op::create(0), Op::annihilate(0)})});
  ASSERT_EQ(number.size(), 1U);
  EXPECT_TRUE(number[0].is_self_adjoint);

  EXPECT_EQ(code_of([] {
              build_pair_terms({mono({0, 1}, {Op::create(0), Op::annihilate(1)})});
            }),
            ErrorCode::kNotConjugateClosed);
  EXPECT_EQ(code_of([] {
              build_pair_terms({mono(1.0, {Op::create(0), Op::annihilate(0)}),
                                mono(1.0, {Op::create(0), Op::annihilate(0)})});
            }),
            ErrorCode::kDuplicateMonomial);
  EXPECT_EQ(code_of([] {
              build_pair_terms({mono({0, 1}, {Op::create(0), Op::annihilate(1)}),
                                mono({0, 1}, {Op::create(1), Op::annihilate(0)})});
            }),
            ErrorCode::kNotConjugateClosed);
}

TEST(PairToOneSparse, HoppingSwapsOneAndTwo) {
  const auto pairs = build_pair_terms({mono(1.0, {Op::create(0), Op::annihilate(1)}),
                                       mono(1.0, {Op::create(1), Op::annihilate(0)})});
  const auto h = pair_to_one_sparse(pairs[0], 2);
  EXPECT_EQ(h->partner(1), 2U);
  EXPECT_EQ(h->partner(2), 1U);
  EXPECT_EQ(h->partner(0), 0U);
  EXPECT_EQ(h->partner(3), 3U);
  EXPECT_EQ(h->value(0), Complex{});
  Dense expected = Dense::Zero(4, 4);
  expected(1, 2) = expected(2, 1) = 1.0;
  EXPECT_EQ(reconstruct_dense(*h), expected);
}

TEST(PairToOneSparse, NumberOperator) {
  const auto pairs = build_pair_terms({mono(0.5, {Op::create(0), Op::annihilate(0)})});
  Dense expected = Dense::Zero(2, 2);
  expected(1, 1) = 0.5;
  EXPECT_EQ(reconstruct_dense(*pair_to_one_sparse(pairs[0], 1)), expected);
}

std::vector<LadderMonomial> random_closed_list(int modes, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(0, modes - 1);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<LadderMonomial> out;
  for (int k = 0; k < 4; ++k) {
    const int p = mode(rng);
    const int q = mode(rng);
    const int r = mode(rng);
    LadderMonomial m{{coeff(rng), coeff(rng)}, {Op::create(p), Op::create(q), Op::annihilate(r)}};
    if (k % 2 == 0) m.ops = {Op::create(p), Op::annihilate(q)};
    if (m.self_adjoint_ops()) continue;
    const auto adj = m.adjoint();
    bool dup = false;
    for (const auto& e : out) dup = dup || e.ops == m.ops || e.ops == adj.ops;
    if (dup) continue;
    out.push_back(m);
    out.push_back(adj);
  }
  out.push_back(mono(0.25, {Op::create(0), Op::annihilate(0)}));
  return out;
}

TEST(PairToOneSparse, MatchesBruteForceAndSums) {
  std::mt19937_64 rng(41);
  for (int modes : {3, 4, 6}) {
    const auto list = random_closed_list(modes, rng);
    const auto pairs = build_pair_terms(list);
    const auto dim = static_cast<Eigen::Index>(1) << modes;
    Dense total = Dense::Zero(dim, dim);
    for (const auto& p : pairs) {
      const auto h = pair_to_one_sparse(p, modes);
      EXPECT_TRUE(validate(*h).ok());
      Dense expected = testing::jw_monomial(modes, p.monomial);
      if (!p.is_self_adjoint) expected += Dense(expected.adjoint());
      EXPECT_LE((reconstruct_dense(*h) - expected).cwiseAbs().maxCoeff(), 1e-15);
      total += reconstruct_dense(*h);
    }
    Dense brute = Dense::Zero(dim, dim);
    for (const auto& m : list) brute += testing::jw_monomial(modes, m);
    const auto summed = monomial_hamiltonian(list, modes);
    EXPECT_LE((total - brute).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((reconstruct_dense(*summed) - brute).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE(summed->sparsity(), list.size());
    EXPECT_TRUE(validate(*summed).ok());
  }
}

TEST(MonomialTermCount, Examples) {
  EXPECT_EQ(monomial_term_count(2, 1.0, 0.5), 8U);
  EXPECT_EQ(monomial_term_count(2, 1.0, 1.5), 4U);
  EXPECT_EQ(code_of([] { monomial_term_count(2, 1.0, 0.0); }), ErrorCode::kInvalidTolerance);
}

TEST(DecomposeMonomials, ReconstructsHopping) {
  const std::vector<LadderMonomial> list{mono(1.0, {Op::create(0), Op::annihilate(1)}),
                                         mono(1.0, {Op::create(1), Op::annihilate(0)})};
  const auto pairs = build_pair_terms(list);
  const auto terms = decompose_monomials(pairs, 2, 0.5);
  EXPECT_EQ(terms.size(), monomial_term_count(list.size(), 1.0, 0.5));
  Dense sum = Dense::Zero(4, 4);
  for (const auto& [a, g] : terms.terms) sum += a * reconstruct_dense(g);
  EXPECT_EQ(sum, reconstruct_dense(*monomial_hamiltonian(list, 2)));
}

}  // namespace
}  // namespace svqe
