// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file estimator.hpp
 * @brief Hadamard-test estimation of <0|V^dagger G U|0> and of weighted sums
 *        of such terms.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "svqe/circuit.hpp"
#include "svqe/decompose.hpp"
#include "svqe/sparse.hpp"

namespace svqe {

enum class Part { kRe, kIm };
enum class ApplyMode { kDirect, kOracle };

std::string_view to_string(Part part);

/// A circuit with bound parameters.
struct PreparedState {
  AnsatzCircuit circuit;
  std::vector<double> theta;

  /// The empty circuit on n qubits.
  static PreparedState identity(int num_qubits);
};

struct HadamardTestRecord {
  std::size_t term_id = 0;
  Part part = Part::kRe;
  std::uint64_t shots = 0;
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
  double estimate = 0.0;   ///< (zeros - ones) / shots
  double std_error = 0.0;  ///< sqrt((1 - estimate^2) / shots)
};

struct ShotAssignment {
  std::size_t term_id = 0;
  Part part = Part::kRe;
  std::uint64_t shots = 1;
};

struct ShotPlan {
  double total_epsilon = 0.0;
  std::vector<ShotAssignment> per_term;

  /// Same shots for every term and both parts.
  static ShotPlan uniform(std::size_t num_terms, std::uint64_t shots);
  std::uint64_t total_shots() const;
  std::optional<std::uint64_t> find(std::size_t term_id, Part part) const;
};

/// Probability of reading 0 on the test qubit of the Hadamard-test circuit:
/// (1 + Re w) / 2 or (1 + Im w) / 2 with w = <0|V^dagger G U|0>.
/// `counter` collects oracle queries in kOracle mode.
double hadamard_probability(const PreparedState& u, const PreparedState& v,
                            const SelfInverseTerm& g, Part part,
                            ApplyMode mode = ApplyMode::kDirect,
                            QueryCounter* counter = nullptr);

/// Binomial draw of M outcomes from a known p(0). The stream is seeded by
/// (seed, term_id, part).
HadamardTestRecord sample_from_probability(double p0, std::size_t term_id,
                                           Part part, std::uint64_t shots,
                                           std::uint64_t seed);

HadamardTestRecord sample_term(const PreparedState& u, const PreparedState& v,
                               const SelfInverseTerm& g, Part part,
                               std::uint64_t shots, std::uint64_t seed,
                               std::size_t term_id = 0,
                               ApplyMode mode = ApplyMode::kDirect);

struct ObservableEstimate {
  Complex value;
  double std_error = 0.0;
  std::vector<HadamardTestRecord> records;
  std::uint64_t total_shots = 0;
};

struct EstimateOptions {
  bool exact = false;  ///< use p(0) directly instead of sampling
  ApplyMode mode = ApplyMode::kDirect;
  std::uint64_t seed = 0;
};

/// Sum_j alpha_j (Re_j + i Im_j). When u and v are the same prepared state
/// only real parts are evaluated. Throws INCOMPLETE_PLAN when a sampled
/// run lacks shots for a needed (term, part).
ObservableEstimate estimate_observable(const SelfInverseTermList& terms,
                                       const PreparedState& u,
                                       const PreparedState& v,
                                       const ShotPlan& plan,
                                       const EstimateOptions& options);

/// Total ceil((sum |alpha|)^2 / eps^2) split in proportion to |alpha_j| by
/// largest remainder, then raised to at least one shot each. Real parts only;
/// see with_imaginary_parts().
ShotPlan allocate_shots(const std::vector<double>& coefficients, double epsilon);

/// Copies each real-part assignment to the imaginary part.
ShotPlan with_imaginary_parts(const ShotPlan& plan);

}  // namespace svqe
