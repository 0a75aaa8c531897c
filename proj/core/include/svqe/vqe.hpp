// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "svqe/circuit.hpp"
#include "svqe/decompose.hpp"
#include "svqe/estimator.hpp"

namespace svqe {

enum class Optimizer { kSimplex, kSpsa };
enum class StopReason { kTolerance, kMaxIters, kStalled };

std::string_view to_string(Optimizer o);
std::string_view to_string(StopReason r);

struct Evaluation {
  std::vector<double> theta;
  double energy = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;  ///< cumulative over the run
};

struct OptimizationTrace {
  std::vector<Evaluation> iterations;  ///< every objective evaluation
  std::vector<double> best_theta;
  double best_energy = 0.0;
  bool converged = false;
  StopReason stop_reason = StopReason::kMaxIters;
};

struct VqeConfig {
  Optimizer optimizer = Optimizer::kSimplex;
  int max_iters = 2000;
  double f_tol = 1e-10;
  double x_tol = 1e-7;            ///< simplex size for Nelder-Mead
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shots_per_term;  ///< empty: exact mode
  ApplyMode mode = ApplyMode::kDirect;
  double initial_step = 0.5;
  /// SPSA gains a_k = a / (k + 1 + A)^alpha, c_k = c / (k + 1)^gamma.
  double spsa_a = 0.6;
  double spsa_c = 0.1;
  double spsa_stability = 10.0;
  /// SPSA iterations before the f_tol test applies.
  int spsa_burn_in = 400;
  /// Called after every evaluation (for streaming reports).
  std::function<void(const Evaluation&)> on_evaluation;
};

/// Minimizes the estimated <psi(theta)|H|psi(theta)>.
OptimizationTrace optimize(const SelfInverseTermList& terms,
                           const AnsatzCircuit& ansatz, const VqeConfig& config);

}  // namespace svqe
