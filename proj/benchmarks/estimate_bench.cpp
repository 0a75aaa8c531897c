// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "svqe/fermion.hpp"
#include "svqe/estimator.hpp"

namespace {

svqe::SelfInverseTermList hopping_chain(int modes, double gamma) {
  std::vector<svqe::LadderMonomial> list;
  for (int p = 0; p + 1 < modes; ++p) {
    list.push_back({1.0, {svqe::LadderOp::create(p), svqe::LadderOp::annihilate(p + 1)}});
    list.push_back({1.0, {svqe::LadderOp::create(p + 1), svqe::LadderOp::annihilate(p)}});
  }
  return svqe::decompose_monomials(svqe::build_pair_terms(list), modes, gamma);
}

void BM_EstimateExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto terms = hopping_chain(n, 0.1);
  const svqe::AnsatzTemplate t{2, svqe::AnsatzTemplate::Entangler::kCnotRing, {svqe::GateKind::kRY}};
  const auto circuit = t.expand(n);
  const svqe::PreparedState psi{circuit, std::vector<double>(circuit.parameter_count, 0.3)};
  svqe::EstimateOptions options;
  options.exact = true;
  options.mode = state.range(1) != 0 ? svqe::ApplyMode::kOracle : svqe::ApplyMode::kDirect;
  for (auto _ : state) benchmark::DoNotOptimize(svqe::estimate_observable(terms, psi, psi, {}, options));
  state.counters["terms"] = static_cast<double>(terms.size());
}
BENCHMARK(BM_EstimateExact)->Args({4, 0})->Args({4, 1})->Args({6, 0})->Args({6, 1});

}  // namespace
