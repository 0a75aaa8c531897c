// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "svqe/term_apply.hpp"

namespace {

svqe::SelfInverseTerm shuffled_term(int n) {
  const svqe::BasisIndex dim = svqe::BasisIndex{1} << n;
  std::vector<svqe::BasisIndex> order(dim), partner(dim);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(order.begin(), order.end(), rng);
  for (svqe::BasisIndex i = 0; i + 1 < dim; i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }
  return svqe::SelfInverseTerm::from_tables(n, partner, std::vector<int>(dim, 1),
                                            svqe::PhaseClass::kReal);
}

svqe::StateVector uniform_state(svqe::RegisterLayout layout) {
  svqe::StateVector s(layout);
  const svqe::BasisIndex dim = svqe::BasisIndex{1} << layout.system_qubits;
  for (svqe::BasisIndex i = 0; i < dim; ++i) s[i] = 1.0 / std::sqrt(static_cast<double>(dim));
  return s;
}

void BM_ApplyDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = shuffled_term(n);
  auto s = uniform_state({n, false, false});
  for (auto _ : state) {
    svqe::apply_term_direct(g, s);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ApplyDirect)->Arg(4)->Arg(8)->Arg(10);

void BM_ApplyOracleFaithful(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = shuffled_term(n);
  auto s = uniform_state({n, true, false});
  svqe::QueryCounter counter;
  for (auto _ : state) {
    svqe::apply_term_oracle_faithful(g, s, counter);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ApplyOracleFaithful)->Arg(4)->Arg(8)->Arg(10);

}  // namespace
