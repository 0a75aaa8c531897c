// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "svqe/error.hpp"
#include "svqe/term_apply.hpp"

namespace svqe {

namespace {

const Matrix2 kHadamard = gate_matrix(GateKind::kH, 0.0);
const Matrix2 kSdg = gate_matrix(GateKind::kSdg, 0.0);

void check_compatible(const PreparedState& u, const PreparedState& v,
                      const SelfInverseTerm* g) {
  const int n = u.circuit.num_qubits;
  if (v.circuit.num_qubits != n || (g && g->num_qubits() != n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "U, V and G must act on the same number of qubits");
  }
}

RegisterLayout test_layout(int n, ApplyMode mode) {
  return {n, mode == ApplyMode::kOracle, true};
}

// Test qubit in |+> (or |-i>) followed by controlled U.
StateVector prepare_after_u(const PreparedState& u, Part part, ApplyMode mode) {
  StateVector state(test_layout(u.circuit.num_qubits, mode));
  const int t = state.layout().test_qubit();
  state.apply_matrix(t, kHadamard);
  if (part == Part::kIm) state.apply_matrix(t, kSdg);
  apply_circuit(u.circuit, u.theta, state, 0, false, t);
  return state;
}

double finish(StateVector state, const PreparedState& v,
              const SelfInverseTerm& g, ApplyMode mode, QueryCounter* counter) {
  const int t = state.layout().test_qubit();
  if (mode == ApplyMode::kOracle) {
    QueryCounter local;
    apply_term_oracle_faithful(g, state, counter ? *counter : local, t);
  } else {
    apply_term_direct(g, state, t);
  }
  apply_circuit(v.circuit, v.theta, state, 0, true, t);
  state.apply_matrix(t, kHadamard);
  return std::clamp(state.probability_zero(t), 0.0, 1.0);
}

bool same_state(const PreparedState& u, const PreparedState& v) {
  return u.circuit == v.circuit && u.theta == v.theta;
}

}  // namespace

std::string_view to_string(Part part) { return part == Part::kRe ? "RE" : "IM"; }

PreparedState PreparedState::identity(int num_qubits) {
  return {AnsatzCircuit{num_qubits, {}, 0}, {}};
}

ShotPlan ShotPlan::uniform(std::size_t num_terms, std::uint64_t shots) {
  ShotPlan plan;
  for (std::size_t j = 0; j < num_terms; ++j) {
    plan.per_term.push_back({j, Part::kRe, shots});
    plan.per_term.push_back({j, Part::kIm, shots});
  }
  return plan;
}

std::uint64_t ShotPlan::total_shots() const {
  std::uint64_t total = 0;
  for (const auto& a : per_term) total += a.shots;
  return total;
}

std::optional<std::uint64_t> ShotPlan::find(std::size_t term_id, Part part) const {
  for (const auto& a : per_term) {
    if (a.term_id == term_id && a.part == part) return a.shots;
  }
  return std::nullopt;
}

double hadamard_probability(const PreparedState& u, const PreparedState& v,
                            const SelfInverseTerm& g, Part part, ApplyMode mode,
                            QueryCounter* counter) {
  check_compatible(u, v, &g);
  return finish(prepare_after_u(u, part, mode), v, g, mode, counter);
}

HadamardTestRecord sample_from_probability(double p0, std::size_t term_id,
                                           Part part, std::uint64_t shots,
                                           std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::kBadInput, "shots must be >= 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(term_id),
                    static_cast<std::uint32_t>(term_id >> 32),
                    static_cast<std::uint32_t>(part)};
  std::mt19937_64 rng(seq);
  std::binomial_distribution<std::uint64_t> draw(shots, std::clamp(p0, 0.0, 1.0));
  HadamardTestRecord r;
  r.term_id = term_id;
  r.part = part;
  r.shots = shots;
  r.zeros = draw(rng);
  r.ones = shots - r.zeros;
  r.estimate = (static_cast<double>(r.zeros) - static_cast<double>(r.ones)) /
               static_cast<double>(shots);
  r.std_error = std::sqrt(std::max(0.0, 1.0 - r.estimate * r.estimate) /
                          static_cast<double>(shots));
  return r;
}

HadamardTestRecord sample_term(const PreparedState& u, const PreparedState& v,
                               const SelfInverseTerm& g, Part part,
                               std::uint64_t shots, std::uint64_t seed,
                               std::size_t term_id, ApplyMode mode) {
  const double p0 = hadamard_probability(u, v, g, part, mode);
  return sample_from_probability(p0, term_id, part, shots, seed);
}

ObservableEstimate estimate_observable(const SelfInverseTermList& terms,
                                       const PreparedState& u,
                                       const PreparedState& v,
                                       const ShotPlan& plan,
                                       const EstimateOptions& options) {
  check_compatible(u, v, nullptr);
  std::vector<Part> parts{Part::kRe};
  if (!same_state(u, v)) parts.push_back(Part::kIm);

  if (!options.exact) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      for (Part part : parts) {
        if (!plan.find(j, part)) {
          throw Error(ErrorCode::kIncompletePlan,
                      "shot plan has no " + std::string(to_string(part)) +
                          " entry for term " + std::to_string(j));
        }
      }
    }
  }

  ObservableEstimate out;
  double variance = 0.0;
  for (Part part : parts) {
    const StateVector prepared = prepare_after_u(u, part, options.mode);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      const auto& [alpha, g] = terms.terms[j];
      if (g.num_qubits() != u.circuit.num_qubits) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "term " + std::to_string(j) + " has the wrong qubit count");
      }
      const double p0 = finish(prepared, v, g, options.mode, nullptr);
      HadamardTestRecord r;
      if (options.exact) {
        r.term_id = j;
        r.part = part;
        r.estimate = 2.0 * p0 - 1.0;
      } else {
        r = sample_from_probability(p0, j, part, *plan.find(j, part),
                                    options.seed);
        variance += alpha * alpha * r.std_error * r.std_error;
        out.total_shots += r.shots;
      }
      out.value += part == Part::kRe ? Complex{alpha * r.estimate, 0.0}
                                     : Complex{0.0, alpha * r.estimate};
      out.records.push_back(r);
    }
  }
  out.std_error = std::sqrt(variance);
  return out;
}

ShotPlan allocate_shots(const std::vector<double>& coefficients, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "epsilon must be a positive finite number");
  }
  ShotPlan plan;
  plan.total_epsilon = epsilon;
  const std::size_t m = coefficients.size();
  if (m == 0) return plan;

  double weight = 0.0;
  for (double a : coefficients) weight += std::abs(a);
  const auto total = static_cast<std::uint64_t>(
      std::ceil(weight * weight / (epsilon * epsilon)));

  std::vector<std::uint64_t> shots(m, 0);
  std::vector<double> remainder(m, 0.0);
  std::uint64_t assigned = 0;
  if (weight > 0.0) {
    for (std::size_t j = 0; j < m; ++j) {
      const double exact =
          static_cast<double>(total) * std::abs(coefficients[j]) / weight;
      shots[j] = static_cast<std::uint64_t>(std::floor(exact));
      remainder[j] = exact - static_cast<double>(shots[j]);
      assigned += shots[j];
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return remainder[a] > remainder[b];
    });
    for (std::size_t k = 0; assigned < total && k < m; ++k, ++assigned) {
      ++shots[order[k]];
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    plan.per_term.push_back({j, Part::kRe, std::max<std::uint64_t>(shots[j], 1)});
  }
  return plan;
}

ShotPlan with_imaginary_parts(const ShotPlan& plan) {
  ShotPlan out;
  out.total_epsilon = plan.total_epsilon;
  for (const auto& a : plan.per_term) {
    if (a.part != Part::kRe) continue;
    out.per_term.push_back(a);
    out.per_term.push_back({a.term_id, Part::kIm, a.shots});
  }
  return out;
}

}  // namespace svqe
