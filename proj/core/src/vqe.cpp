// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/vqe.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "svqe/error.hpp"

namespace svqe {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Objective {
 public:
  Objective(const SelfInverseTermList& terms, const AnsatzCircuit& ansatz,
            const VqeConfig& config)
      : terms_(terms), ansatz_(ansatz), config_(config) {
    if (config.shots_per_term) {
      plan_ = ShotPlan::uniform(terms.size(), *config.shots_per_term);
    }
    window_ = 2 * static_cast<std::size_t>(ansatz.parameter_count);
  }

  double operator()(const std::vector<double>& theta) {
    const PreparedState psi{ansatz_, theta};
    EstimateOptions options;
    options.exact = !config_.shots_per_term.has_value();
    options.mode = config_.mode;
    options.seed = splitmix64(config_.seed ^ splitmix64(trace_.iterations.size()));
    const auto est = estimate_observable(terms_, psi, psi, plan_, options);
    shots_ += est.total_shots;

    Evaluation e{theta, est.value.real(), est.std_error, shots_};
    trace_.iterations.push_back(e);
    if (trace_.iterations.size() == 1 || e.energy < trace_.best_energy) {
      trace_.best_energy = e.energy;
      trace_.best_theta = theta;
    }
    best_history_.push_back(trace_.best_energy);
    if (config_.on_evaluation) config_.on_evaluation(e);
    return e.energy;
  }

  /// Best energy improved by less than f_tol over the last 2p evaluations.
  bool flat() const {
    const std::size_t n = best_history_.size();
    if (n <= window_) return false;
    return best_history_[n - 1 - window_] - best_history_[n - 1] < config_.f_tol;
  }

  OptimizationTrace take() { return std::move(trace_); }

 private:
  const SelfInverseTermList& terms_;
  const AnsatzCircuit& ansatz_;
  const VqeConfig& config_;
  ShotPlan plan_;
  OptimizationTrace trace_;
  std::vector<double> best_history_;
  std::size_t window_ = 2;
  std::uint64_t shots_ = 0;
};

double gsl_objective(const gsl_vector* v, void* params) {
  auto* f = static_cast<Objective*>(params);
  std::vector<double> theta(v->size);
  for (std::size_t i = 0; i < v->size; ++i) theta[i] = gsl_vector_get(v, i);
  return (*f)(theta);
}

struct GslMinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* s) const { gsl_multimin_fminimizer_free(s); }
};
struct GslVectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

StopReason run_simplex(Objective& f, std::vector<double> theta,
                       const VqeConfig& config) {
  const std::size_t p = theta.size();
  std::unique_ptr<gsl_vector, GslVectorDeleter> x(gsl_vector_alloc(p));
  std::unique_ptr<gsl_vector, GslVectorDeleter> step(gsl_vector_alloc(p));
  for (std::size_t i = 0; i < p; ++i) gsl_vector_set(x.get(), i, theta[i]);
  gsl_vector_set_all(step.get(), config.initial_step);

  gsl_multimin_function fn{&gsl_objective, p, &f};
  std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter> s(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, p));
  gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), step.get());

  for (int iter = 0; iter < config.max_iters; ++iter) {
    if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) {
      return StopReason::kStalled;
    }
    if (f.flat() && gsl_multimin_fminimizer_size(s.get()) < config.x_tol) {
      return StopReason::kTolerance;
    }
  }
  return StopReason::kMaxIters;
}

StopReason run_spsa(Objective& f, std::vector<double> theta,
                    const VqeConfig& config, std::mt19937_64& rng) {
  constexpr double kAlpha = 0.602;
  constexpr double kGamma = 0.101;
  std::bernoulli_distribution coin(0.5);
  std::vector<double> delta(theta.size());
  std::vector<double> probe(theta.size());
  for (int k = 0; k < config.max_iters; ++k) {
    const double a = config.spsa_a / std::pow(k + 1 + config.spsa_stability, kAlpha);
    const double c = config.spsa_c / std::pow(k + 1, kGamma);
    for (double& d : delta) d = coin(rng) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < theta.size(); ++i) probe[i] = theta[i] + c * delta[i];
    const double plus = f(probe);
    for (std::size_t i = 0; i < theta.size(); ++i) probe[i] = theta[i] - c * delta[i];
    const double minus = f(probe);
    const double slope = (plus - minus) / (2.0 * c);
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= a * slope * delta[i];
    if (k + 1 >= config.spsa_burn_in && f.flat()) return StopReason::kTolerance;
  }
  return StopReason::kMaxIters;
}

}  // namespace

std::string_view to_string(Optimizer o) {
  return o == Optimizer::kSimplex ? "SIMPLEX" : "SPSA";
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::kTolerance: return "TOLERANCE";
    case StopReason::kMaxIters: return "MAX_ITERS";
    case StopReason::kStalled: return "STALLED";
  }
  return "?";
}

OptimizationTrace optimize(const SelfInverseTermList& terms,
                           const AnsatzCircuit& ansatz, const VqeConfig& config) {
  if (terms.empty()) throw Error(ErrorCode::kBadInput, "term list is empty");
  ansatz.validate();
  if (ansatz.parameter_count < 1) {
    throw Error(ErrorCode::kBadInput, "ansatz has no parameters");
  }
  if (config.max_iters < 1) throw Error(ErrorCode::kBadInput, "max_iters must be >= 1");
  gsl_set_error_handler_off();

  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), 0x7e7aU};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::vector<double> theta(static_cast<std::size_t>(ansatz.parameter_count));
  for (double& t : theta) t = jitter(rng);

  Objective f(terms, ansatz, config);
  const StopReason reason = config.optimizer == Optimizer::kSimplex
                                ? run_simplex(f, theta, config)
                                : run_spsa(f, theta, config, rng);
  OptimizationTrace trace = f.take();
  trace.stop_reason = reason;
  trace.converged = reason == StopReason::kTolerance;
  return trace;
}

}  // namespace svqe
