// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace svqe::testing {

namespace {

using M2 = Eigen::Matrix2cd;
const Complex kI{0.0, 1.0};

M2 m2(Complex a, Complex b, Complex c, Complex d) {
  M2 m;
  m << a, b, c, d;
  return m;
}

// Operator on n qubits that is `ops[q]` on qubit q (bit q of the index) and
// identity elsewhere.
Dense kron_ops(int n, const std::map<int, M2>& ops) {
  Dense out = Dense::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    auto it = ops.find(q);
    const M2 m = it == ops.end() ? M2::Identity() : it->second;
    Dense next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = m(r, c) * out;
      }
    }
    out = next;
  }
  return out;
}

M2 reference_gate(GateKind k, double a) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (k) {
    case GateKind::kX:
    case GateKind::kCNOT: return m2(0, 1, 1, 0);
    case GateKind::kY: return m2(0, -kI, kI, 0);
    case GateKind::kZ:
    case GateKind::kCZ: return m2(1, 0, 0, -1);
    case GateKind::kH: return m2(r, r, r, -r);
    case GateKind::kS: return m2(1, 0, 0, kI);
    case GateKind::kSdg: return m2(1, 0, 0, -kI);
    case GateKind::kRX: return m2(std::cos(a / 2), -kI * std::sin(a / 2), -kI * std::sin(a / 2), std::cos(a / 2));
    case GateKind::kRY: return m2(std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2));
    case GateKind::kRZ: return m2(std::exp(-kI * (a / 2)), 0, 0, std::exp(kI * (a / 2)));
  }
  return M2::Identity();
}

}  // namespace

Entries random_one_sparse(int n, double bound, std::mt19937_64& rng) {
  const BasisIndex dim = BasisIndex{1} << n;
  std::vector<BasisIndex> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> part(-bound / std::sqrt(2.0), bound / std::sqrt(2.0));
  std::uniform_int_distribution<int> kind(0, 3);
  Entries out;
  std::size_t i = 0;
  while (i < dim) {
    const int k = kind(rng);
    if (k == 0 || i + 1 == dim) {  // diagonal or empty row
      if (kind(rng) < 2) out.emplace_back(order[i], order[i], Complex{part(rng) * std::sqrt(2.0), 0.0});
      ++i;
    } else {
      const BasisIndex x = std::min(order[i], order[i + 1]);
      const BasisIndex y = std::max(order[i], order[i + 1]);
      out.emplace_back(x, y, Complex{part(rng), part(rng)});
      i += 2;
    }
  }
  return out;
}

Entries random_d_sparse(int n, int d, double bound, std::mt19937_64& rng) {
  const BasisIndex dim = BasisIndex{1} << n;
  std::uniform_int_distribution<BasisIndex> index(0, dim - 1);
  std::uniform_real_distribution<double> part(-bound / std::sqrt(2.0), bound / std::sqrt(2.0));
  std::vector<int> count(dim, 0);
  std::set<std::pair<BasisIndex, BasisIndex>> used;
  Entries out;
  for (int attempt = 0; attempt < static_cast<int>(dim) * d * 8; ++attempt) {
    BasisIndex x = index(rng);
    BasisIndex y = index(rng);
    if (x > y) std::swap(x, y);
    if (used.count({x, y}) || count[x] >= d || count[y] >= d) continue;
    used.insert({x, y});
    ++count[x];
    if (x != y) ++count[y];
    out.emplace_back(x, y, x == y ? Complex{part(rng), 0.0} : Complex{part(rng), part(rng)});
  }
  return out;
}

Dense dense_from_entries(int n, const Entries& entries) {
  const auto dim = static_cast<Eigen::Index>(1) << n;
  Dense m = Dense::Zero(dim, dim);
  for (const auto& [x, y, v] : entries) {
    m(x, y) = v;
    m(y, x) = std::conj(v);
  }
  return m;
}

SelfInverseTerm random_term(int n, std::mt19937_64& rng) {
  const BasisIndex dim = BasisIndex{1} << n;
  std::vector<BasisIndex> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<BasisIndex> partner(dim);
  std::vector<int> sign(dim);
  std::bernoulli_distribution coin(0.5);
  const auto cls = coin(rng) ? PhaseClass::kReal : PhaseClass::kImaginary;
  std::size_t i = 0;
  while (i < dim) {
    const int s = coin(rng) ? 1 : -1;
    if (i + 1 == dim || coin(rng)) {
      partner[order[i]] = order[i];
      sign[order[i]] = s;
      ++i;
      continue;
    }
    const BasisIndex x = order[i];
    const BasisIndex y = order[i + 1];
    partner[x] = y;
    partner[y] = x;
    sign[x] = s;
    sign[y] = cls == PhaseClass::kReal ? s : -s;
    i += 2;
  }
  return SelfInverseTerm::from_tables(n, partner, sign, cls);
}

StateVector random_state(RegisterLayout layout, std::mt19937_64& rng) {
  StateVector s(layout);
  std::normal_distribution<double> g;
  BasisIndex allowed = (BasisIndex{1} << layout.system_qubits) - 1;
  if (layout.test_ancilla) allowed |= BasisIndex{1} << layout.test_qubit();
  double norm = 0.0;
  for (BasisIndex i = 0; i < s.dimension(); ++i) {
    if ((i & ~allowed) != 0) continue;
    s[i] = Complex{g(rng), g(rng)};
    norm += std::norm(s[i]);
  }
  for (auto& a : s.amplitudes()) a /= std::sqrt(norm);
  return s;
}

AnsatzCircuit random_circuit(int n, int depth, std::mt19937_64& rng) {
  static const GateKind kKinds[] = {GateKind::kX,  GateKind::kY,  GateKind::kZ,  GateKind::kH,
                                    GateKind::kS,  GateKind::kSdg, GateKind::kRX, GateKind::kRY,
                                    GateKind::kRZ, GateKind::kCNOT, GateKind::kCZ};
  std::uniform_int_distribution<int> pick(0, 10);
  std::uniform_int_distribution<int> qubit(0, n - 1);
  AnsatzCircuit c;
  c.num_qubits = n;
  for (int i = 0; i < depth; ++i) {
    GateKind k = kKinds[pick(rng)];
    if (n == 1 && (k == GateKind::kCNOT || k == GateKind::kCZ)) k = GateKind::kRY;
    Gate g{k, qubit(rng), -1, -1, 0.0};
    if (k == GateKind::kCNOT || k == GateKind::kCZ) {
      do g.control = qubit(rng); while (g.control == g.target);
    }
    if (is_rotation(k)) g.param = c.parameter_count++;
    c.gates.push_back(g);
  }
  return c;
}

std::vector<double> random_angles(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-M_PI, M_PI);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& v : out) v = a(rng);
  return out;
}

Dense dense_circuit(const AnsatzCircuit& c, const std::vector<double>& theta) {
  const auto dim = static_cast<Eigen::Index>(1) << c.num_qubits;
  Dense u = Dense::Identity(dim, dim);
  const M2 p0 = m2(1, 0, 0, 0);
  const M2 p1 = m2(0, 0, 0, 1);
  for (const Gate& g : c.gates) {
    const double a = g.param >= 0 ? theta[static_cast<std::size_t>(g.param)] : g.angle;
    const M2 m = reference_gate(g.kind, a);
    Dense full;
    if (g.control >= 0) {
      full = kron_ops(c.num_qubits, {{g.control, p0}}) +
             kron_ops(c.num_qubits, {{g.control, p1}, {g.target, m}});
    } else {
      full = kron_ops(c.num_qubits, {{g.target, m}});
    }
    u = full * u;
  }
  return u;
}

Dense dense_pauli(const std::string& label) {
  std::map<int, M2> ops;
  for (std::size_t q = 0; q < label.size(); ++q) {
    switch (label[q]) {
      case 'X': ops[static_cast<int>(q)] = m2(0, 1, 1, 0); break;
      case 'Y': ops[static_cast<int>(q)] = m2(0, -kI, kI, 0); break;
      case 'Z': ops[static_cast<int>(q)] = m2(1, 0, 0, -1); break;
      default: break;
    }
  }
  return kron_ops(static_cast<int>(label.size()), ops);
}

Dense jw_annihilate(int num_modes, int p) {
  std::map<int, M2> ops;
  for (int q = 0; q < p; ++q) ops[q] = m2(1, 0, 0, -1);
  ops[p] = m2(0, 1, 0, 0);  // |0><1|
  return kron_ops(num_modes, ops);
}

Dense jw_monomial(int num_modes, const LadderMonomial& m) {
  const auto dim = static_cast<Eigen::Index>(1) << num_modes;
  Dense out = Dense::Identity(dim, dim) * m.coefficient;
  for (const LadderOp& op : m.ops) {
    const Dense a = jw_annihilate(num_modes, op.mode);
    out = out * (op.kind == LadderOp::Kind::kCreate ? Dense(a.adjoint()) : a);
  }
  return out;
}

Eigen::VectorXcd system_vector(const StateVector& s, int n) {
  const auto dim = static_cast<Eigen::Index>(1) << n;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = s[static_cast<BasisIndex>(i)];
  return v;
}

}  // namespace svqe::testing
