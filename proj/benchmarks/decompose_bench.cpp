// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "svqe/decompose.hpp"

namespace {

std::shared_ptr<const svqe::SparseOracleMatrix> banded(int n, int d) {
  std::vector<std::tuple<svqe::BasisIndex, svqe::BasisIndex, svqe::Complex>> entries;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  const svqe::BasisIndex dim = svqe::BasisIndex{1} << n;
  for (svqe::BasisIndex x = 0; x < dim; ++x) {
    entries.emplace_back(x, x, svqe::Complex{v(rng), 0.0});
    for (int k = 1; k < d && x + k < dim; k += 2) {
      entries.emplace_back(x, x + k, svqe::Complex{v(rng), v(rng)});
    }
  }
  return std::make_shared<const svqe::SparseOracleMatrix>(
      svqe::SparseOracleMatrix::from_upper_entries(n, entries));
}

void BM_ColorDecompose(benchmark::State& state) {
  const auto h = banded(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(svqe::color_decompose(h));
}
BENCHMARK(BM_ColorDecompose)->Arg(4)->Arg(8)->Arg(10);

void BM_DecomposeSparse(benchmark::State& state) {
  const auto h = banded(8, 3);
  const double gamma = std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(svqe::decompose_sparse(h, gamma));
}
BENCHMARK(BM_DecomposeSparse)->Arg(4)->Arg(10)->Arg(20);

}  // namespace
