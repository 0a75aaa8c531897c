// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "svqe/circuit.hpp"
#include "svqe/decompose.hpp"
#include "svqe/dense.hpp"
#include "svqe/error.hpp"
#include "svqe/estimator.hpp"
#include "svqe/fermion.hpp"
#include "svqe/io.hpp"
#include "svqe/vqe.hpp"

namespace svqe::cli {

namespace {

using Json = nlohmann::ordered_json;

// Largest register for which reports include dense diagnostics.
constexpr int kDenseReportQubits = 10;

struct Options {
  std::string input;
  double gamma = 1e-3;
  std::optional<std::uint64_t> shots;
  bool exact = false;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::string mode = "direct";
  std::string out;
  std::string ansatz;
  std::string theta;
  std::string bra_theta;
  std::string optimizer = "simplex";
  int max_iters = 2000;
  double f_tol = 1e-10;
  int seeds = 100;
  std::string shots_list = "100,1000,10000,100000";
};

struct Input {
  InputKind kind = InputKind::kCoo;
  int num_qubits = 0;
  std::shared_ptr<const SparseOracleMatrix> oracle;  // the full operator
  std::vector<LadderMonomial> monomials;
  std::vector<ConjugatePairTerm> pairs;
};

struct Decomposed {
  SelfInverseTermList terms;
  std::string route;
  int num_bits = 0;
  double lambda = 0.0;
  bool fallback_split_used = false;
  std::size_t num_pieces = 0;
  std::size_t count_bound = 0;
};

Input load(const std::string& path) {
  const std::string text = read_text_file(path);
  Input in;
  in.kind = detect_input_kind(text);
  if (in.kind == InputKind::kCoo) {
    const CooMatrix coo = parse_coo(text);
    in.num_qubits = coo.num_qubits;
    in.oracle = coo.to_oracle();
  } else {
    MonomialSystem sys = parse_monomials(text);
    in.num_qubits = sys.num_modes;
    in.monomials = std::move(sys.monomials);
    in.pairs = build_pair_terms(in.monomials);
    in.oracle = monomial_hamiltonian(in.monomials, in.num_qubits);
  }
  return in;
}

Decomposed decompose_input(const Input& in, double gamma) {
  Decomposed d;
  if (in.kind == InputKind::kCoo) {
    auto sd = decompose_sparse(in.oracle, gamma);
    d.terms = std::move(sd.terms);
    d.route = "generic";
    d.num_bits = sd.plan.num_bits;
    d.lambda = sd.plan.lambda;
    d.fallback_split_used = sd.fallback_split_used;
    d.num_pieces = sd.num_pieces;
    if (in.oracle->max_norm() > 0.0) {
      d.count_bound = 2 * generic_term_count(in.oracle->sparsity(),
                                             in.oracle->max_norm(), gamma);
    }
  } else {
    d.terms = decompose_monomials(in.pairs, in.num_qubits, gamma);
    d.route = "monomial";
    d.num_pieces = in.pairs.size();
    for (const auto& t : d.terms.terms) {
      d.num_bits = std::max(d.num_bits, t.term.bit_index());
      d.lambda = std::max(d.lambda, std::ldexp(t.coefficient, t.term.bit_index() + 1));
    }
    double max_coeff = 0.0;
    for (const auto& m : in.monomials) max_coeff = std::max(max_coeff, std::abs(m.coefficient));
    if (max_coeff > 0.0) {
      d.count_bound = 4 * in.pairs.size() *
                      static_cast<std::size_t>(choose_num_bits(max_coeff, gamma));
    }
  }
  return d;
}

std::optional<double> measured_error(const Input& in, const Decomposed& d) {
  if (in.num_qubits > kDeskScaleQubits) return std::nullopt;
  return reconstruction_error(d.terms, *in.oracle);
}

std::optional<double> ground_energy(const Input& in) {
  if (in.num_qubits > kDenseReportQubits) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(reconstruct_dense(*in.oracle),
                                                    Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Json number_or_null(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadInput, std::string("bad number in ") + what + ": \"" + item + "\"");
    }
  }
  return out;
}

AnsatzCircuit load_ansatz(const Options& o, int num_qubits, int default_layers) {
  AnsatzTemplate t;
  t.layers = default_layers;
  if (!o.ansatz.empty()) t = parse_ansatz_template(read_text_file(o.ansatz));
  return t.expand(num_qubits);
}

std::vector<double> theta_or_zeros(const std::string& text, const AnsatzCircuit& c,
                                   const char* what) {
  std::vector<double> theta = parse_list(text, what);
  if (theta.empty()) theta.assign(static_cast<std::size_t>(c.parameter_count), 0.0);
  if (static_cast<int>(theta.size()) != c.parameter_count) {
    throw Error(ErrorCode::kBadInput,
                std::string(what) + " has " + std::to_string(theta.size()) +
                    " values but the ansatz has " +
                    std::to_string(c.parameter_count) + " parameters");
  }
  return theta;
}

ApplyMode parse_mode(const std::string& mode) {
  return mode == "oracle" ? ApplyMode::kOracle : ApplyMode::kDirect;
}

std::uint64_t require_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("SPARSE_VQE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kBadInput, "SPARSE_VQE_SEED is not an unsigned integer");
  }
  throw Error(ErrorCode::kBadInput, "sampled runs need --seed or SPARSE_VQE_SEED");
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

Json term_json(const Weighted<SelfInverseTerm>& t) {
  Json j;
  j["class"] = t.term.phase_class() == PhaseClass::kReal ? "REAL" : "IMAGINARY";
  j["l"] = t.term.bit_index();
  j["branch"] = t.term.branch() == Branch::kPlus ? "PLUS" : "MINUS";
  j["coefficient"] = t.coefficient;
  j["piece"] = t.term.piece();
  return j;
}

Json record_json(const HadamardTestRecord& r) {
  Json j;
  j["term_id"] = r.term_id;
  j["part"] = to_string(r.part);
  j["shots"] = r.shots;
  j["zeros"] = r.zeros;
  j["ones"] = r.ones;
  j["estimate"] = r.estimate;
  j["std_error"] = r.std_error;
  return j;
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kBadInput, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_decompose(const Options& o, std::ostream& out) {
  const Input in = load(o.input);
  const Decomposed d = decompose_input(in, o.gamma);
  Json report;
  report["route"] = d.route;
  report["gamma"] = o.gamma;
  report["L"] = d.num_bits;
  report["Lambda"] = d.lambda;
  report["term_count"] = d.terms.size();
  report["term_count_bound"] = d.count_bound;
  report["num_pieces"] = d.num_pieces;
  report["fallback_split_used"] = d.fallback_split_used;
  report["residual_error_bound"] = d.terms.residual_error_bound;
  report["measured_error"] = number_or_null(measured_error(in, d));
  Json terms = Json::array();
  for (const auto& t : d.terms.terms) terms.push_back(term_json(t));
  report["terms"] = std::move(terms);
  Sink sink(o.out, out);
  *sink << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  const Input in = load(o.input);
  const Decomposed d = decompose_input(in, o.gamma);
  const AnsatzCircuit c = load_ansatz(o, in.num_qubits, 1);
  const PreparedState u{c, theta_or_zeros(o.theta, c, "--theta")};
  const PreparedState v{c, o.bra_theta.empty() ? u.theta
                                               : theta_or_zeros(o.bra_theta, c, "--bra-theta")};
  const bool same = u.theta == v.theta;

  EstimateOptions options;
  options.mode = parse_mode(o.mode);
  options.exact = o.exact;
  ShotPlan plan;
  if (!o.exact) {
    options.seed = require_seed(o);
    if (o.epsilon) {
      std::vector<double> alphas;
      for (const auto& t : d.terms.terms) alphas.push_back(t.coefficient);
      plan = allocate_shots(alphas, *o.epsilon);
      if (!same) plan = with_imaginary_parts(plan);
    } else {
      plan = ShotPlan::uniform(d.terms.size(), o.shots.value_or(10000));
    }
  }
  const ObservableEstimate est = estimate_observable(d.terms, u, v, plan, options);

  Json report;
  report["estimate"] = {est.value.real(), est.value.imag()};
  report["std_error"] = est.std_error;
  report["total_shots"] = est.total_shots;
  report["exact"] = o.exact;
  report["mode"] = o.mode;
  report["route"] = d.route;
  report["term_count"] = d.terms.size();
  report["residual_error_bound"] = d.terms.residual_error_bound;
  Json records = Json::array();
  for (const auto& r : est.records) records.push_back(record_json(r));
  report["records"] = std::move(records);
  Sink sink(o.out, out);
  *sink << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_vqe(const Options& o, std::ostream& out) {
  const Input in = load(o.input);
  const Decomposed d = decompose_input(in, o.gamma);
  const AnsatzCircuit c = load_ansatz(o, in.num_qubits, 2);

  VqeConfig config;
  if (o.optimizer == "spsa") config.optimizer = Optimizer::kSpsa;
  config.max_iters = o.max_iters;
  config.f_tol = o.f_tol;
  config.mode = parse_mode(o.mode);
  if (!o.exact) {
    config.seed = require_seed(o);
    config.shots_per_term = o.shots.value_or(100000);
  } else {
    config.seed = o.seed.value_or(0);
  }

  Sink sink(o.out, out);
  std::size_t k = 0;
  config.on_evaluation = [&](const Evaluation& e) {
    Json line;
    line["iteration"] = k++;
    line["theta"] = e.theta;
    line["energy"] = e.energy;
    line["std_error"] = e.std_error;
    line["shots"] = e.shots;
    *sink << line.dump() << '\n';
  };
  const OptimizationTrace trace = optimize(d.terms, c, config);

  Json summary;
  summary["summary"] = true;
  summary["optimizer"] = to_string(config.optimizer);
  summary["exact"] = o.exact;
  summary["evaluations"] = trace.iterations.size();
  summary["best_energy"] = trace.best_energy;
  summary["best_theta"] = trace.best_theta;
  summary["converged"] = trace.converged;
  summary["stop_reason"] = to_string(trace.stop_reason);
  summary["residual_error_bound"] = d.terms.residual_error_bound;
  summary["dense_ground_energy"] = number_or_null(ground_energy(in));
  *sink << summary.dump() << '\n';
  return kExitOk;
}

Json check_json(const std::string& name, bool passed, const std::string& detail) {
  Json j;
  j["name"] = name;
  j["passed"] = passed;
  j["detail"] = detail;
  return j;
}

void add_report(Json& checks, const std::string& prefix, const ValidationReport& r,
                bool& all_ok) {
  for (const auto& c : r.checks) {
    std::string detail = c.detail;
    if (c.counterexample) detail += " (first counterexample " + std::to_string(*c.counterexample) + ")";
    checks.push_back(check_json(prefix + c.name, c.passed, detail));
    all_ok = all_ok && c.passed;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Input in = load(o.input);
  if (in.num_qubits > kDeskScaleQubits) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "verify sweeps every basis state and is limited to " +
                    std::to_string(kDeskScaleQubits) + " qubits");
  }
  Json checks = Json::array();
  bool ok = true;
  add_report(checks, "operator.", validate(*in.oracle), ok);

  if (in.kind == InputKind::kCoo) {
    const auto colored = color_decompose(in.oracle);
    bool pieces_ok = true;
    for (const auto& p : colored.pieces.terms) pieces_ok = pieces_ok && validate(*p.term).ok();
    const std::size_t d = in.oracle->sparsity();
    checks.push_back(check_json("pieces.one_sparse_hermitian", pieces_ok,
                                std::to_string(colored.pieces.size()) + " pieces"));
    const bool within = colored.pieces.size() <= 2 * d * d;
    checks.push_back(check_json("pieces.count_within_2d2", within,
                                std::to_string(colored.pieces.size()) + " <= " +
                                    std::to_string(2 * d * d)));
    DenseMatrix sum = DenseMatrix::Zero(in.oracle->dimension(), in.oracle->dimension());
    for (const auto& p : colored.pieces.terms) sum += reconstruct_dense(*p.term);
    const double piece_error = max_norm_distance(sum, reconstruct_dense(*in.oracle));
    checks.push_back(check_json("pieces.sum_exact", piece_error == 0.0,
                                "max error " + std::to_string(piece_error)));
    ok = ok && pieces_ok && within && piece_error == 0.0;
  } else {
    bool pairs_ok = true;
    DenseMatrix sum = DenseMatrix::Zero(in.oracle->dimension(), in.oracle->dimension());
    for (const auto& p : in.pairs) {
      const auto h = pair_to_one_sparse(p, in.num_qubits);
      pairs_ok = pairs_ok && validate(*h).ok();
      sum += reconstruct_dense(*h);
    }
    const double pair_error = max_norm_distance(sum, reconstruct_dense(*in.oracle));
    checks.push_back(check_json("pairs.one_sparse_hermitian", pairs_ok,
                                std::to_string(in.pairs.size()) + " pair terms"));
    checks.push_back(check_json("pairs.sum_exact", pair_error <= 1e-12,
                                "max error " + std::to_string(pair_error)));
    ok = ok && pairs_ok && pair_error <= 1e-12;
  }

  const Decomposed d = decompose_input(in, o.gamma);
  bool terms_ok = true;
  std::string first_bad;
  for (std::size_t j = 0; j < d.terms.size(); ++j) {
    if (!validate(d.terms.terms[j].term).ok() && terms_ok) {
      terms_ok = false;
      first_bad = "term " + std::to_string(j) + " fails validation";
    }
  }
  checks.push_back(check_json("terms.self_inverse_hermitian", terms_ok,
                              terms_ok ? std::to_string(d.terms.size()) + " terms" : first_bad));
  const double error = *measured_error(in, d);
  const bool bounded = error <= d.terms.residual_error_bound;
  checks.push_back(check_json("terms.reconstruction_within_bound", bounded,
                              "measured " + std::to_string(error) + ", bound " +
                                  std::to_string(d.terms.residual_error_bound)));
  ok = ok && terms_ok && bounded;

  Json report;
  report["input_kind"] = in.kind == InputKind::kCoo ? "COO" : "MONOMIALS";
  report["gamma"] = o.gamma;
  report["measured_error"] = error;
  report["passed"] = ok;
  report["checks"] = std::move(checks);
  Sink sink(o.out, out);
  *sink << report.dump(2) << '\n';
  return ok ? kExitOk : kExitValidationFailure;
}

int cmd_bench_shots(const Options& o, std::ostream& out) {
  const Input in = load(o.input);
  const Decomposed d = decompose_input(in, o.gamma);
  const std::uint64_t seed = require_seed(o);
  const AnsatzCircuit c = load_ansatz(o, in.num_qubits, 1);

  std::vector<double> theta;
  if (o.theta.empty()) {
    std::mt19937_64 rng(mix(seed, 0));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < c.parameter_count; ++i) theta.push_back(angle(rng));
  } else {
    theta = theta_or_zeros(o.theta, c, "--theta");
  }
  const PreparedState state{c, theta};

  EstimateOptions exact;
  exact.exact = true;
  exact.mode = parse_mode(o.mode);
  const auto reference = estimate_observable(d.terms, state, state, {}, exact);

  std::vector<double> log_m;
  std::vector<double> log_std;
  Json rows = Json::array();
  for (double m_value : parse_list(o.shots_list, "--shots-list")) {
    if (!(m_value >= 1.0)) throw Error(ErrorCode::kBadInput, "shot counts must be >= 1");
    const auto m = static_cast<std::uint64_t>(m_value);
    std::vector<double> values;
    for (int s = 0; s < o.seeds; ++s) {
      const std::uint64_t run_seed = mix(seed, (m << 20) + static_cast<std::uint64_t>(s) + 1);
      double value = 0.0;
      for (const auto& r : reference.records) {
        const double p0 = 0.5 * (1.0 + r.estimate);
        value += d.terms.terms[r.term_id].coefficient *
                 sample_from_probability(p0, r.term_id, r.part, m, run_seed).estimate;
      }
      values.push_back(value);
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double sd = values.size() > 1 ? std::sqrt(var / static_cast<double>(values.size() - 1)) : 0.0;
    Json row;
    row["shots"] = m;
    row["mean"] = mean;
    row["std"] = sd;
    rows.push_back(row);
    if (sd > 0.0) {
      log_m.push_back(std::log10(static_cast<double>(m)));
      log_std.push_back(std::log10(sd));
    }
  }

  Json report;
  report["seed"] = seed;
  report["seeds_per_row"] = o.seeds;
  report["exact_value"] = reference.value.real();
  report["rows"] = rows;
  std::optional<double> slope;
  if (log_m.size() >= 2) {
    const double n = static_cast<double>(log_m.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      sx += log_m[i];
      sy += log_std[i];
      sxx += log_m[i] * log_m[i];
      sxy += log_m[i] * log_std[i];
    }
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  report["slope"] = number_or_null(slope);
  Sink sink(o.out, out);
  *sink << report.dump(2) << '\n';
  if (!slope) {
    throw Error(ErrorCode::kBadInput,
                "fewer than two shot counts with nonzero spread; the state may be an "
                "eigenstate of every term");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational eigensolver for oracle-defined sparse Hermitian operators",
               "sparse-vqe"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "COO or monomial JSON file")->required();
    sub->add_option("--gamma", o.gamma, "target max-norm error of the decomposition")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto add_sampling = [&o](CLI::App* sub) {
    auto* shots = sub->add_option("--shots", o.shots, "shots per term and part")
                      ->check(CLI::PositiveNumber);
    auto* exact = sub->add_flag("--exact", o.exact, "use exact probabilities");
    shots->excludes(exact);
    sub->add_option("--seed", o.seed, "seed for all sampling (fallback: SPARSE_VQE_SEED)");
    sub->add_option("--mode", o.mode, "term application")
        ->check(CLI::IsMember({"direct", "oracle"}));
    sub->add_option("--ansatz", o.ansatz, "ansatz template JSON");
  };

  auto* decompose = app.add_subcommand("decompose", "decompose into self-inverse terms");
  add_common(decompose);

  auto* estimate = app.add_subcommand("estimate", "estimate <psi|H|phi> by Hadamard tests");
  add_common(estimate);
  add_sampling(estimate);
  estimate->add_option("--theta", o.theta, "comma-separated ket parameters");
  estimate->add_option("--bra-theta", o.bra_theta, "comma-separated bra parameters");
  estimate->add_option("--epsilon", o.epsilon, "allocate shots for this precision")
      ->check(CLI::PositiveNumber);

  auto* vqe = app.add_subcommand("vqe", "minimize the energy over ansatz parameters");
  add_common(vqe);
  add_sampling(vqe);
  vqe->add_option("--optimizer", o.optimizer)->check(CLI::IsMember({"simplex", "spsa"}));
  vqe->add_option("--max-iters", o.max_iters)->check(CLI::PositiveNumber);
  vqe->add_option("--f-tol", o.f_tol)->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "check every invariant on the input");
  add_common(verify);

  auto* bench = app.add_subcommand("bench-shots", "standard deviation against shot count");
  add_common(bench);
  bench->add_option("--seed", o.seed, "base seed (fallback: SPARSE_VQE_SEED)");
  bench->add_option("--seeds", o.seeds, "repetitions per shot count")->check(CLI::Range(2, 1000000));
  bench->add_option("--shots-list", o.shots_list, "comma-separated shot counts");
  bench->add_option("--ansatz", o.ansatz, "ansatz template JSON");
  bench->add_option("--theta", o.theta, "comma-separated parameters (default: seeded)");
  bench->add_option("--mode", o.mode)->check(CLI::IsMember({"direct", "oracle"}));

  std::vector<const char*> argv{"sparse-vqe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*decompose) return cmd_decompose(o, out);
    if (*estimate) return cmd_estimate(o, out);
    if (*vqe) return cmd_vqe(o, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_bench_shots(o, out);
  } catch (const Error& e) {
    err << "sparse-vqe: " << e.what() << '\n';
    const bool internal = e.code() == ErrorCode::kAncillaResidue;
    return internal ? kExitValidationFailure : kExitBadInput;
  }
}

}  // namespace svqe::cli
