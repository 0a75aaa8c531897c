// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "svqe/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "svqe/error.hpp"

namespace svqe {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kBadInput, std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::kBadInput, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int small_count(const json& v, const char* what, int lo, int hi) {
  if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi) {
    throw Error(ErrorCode::kBadInput, std::string(what) + " must be an integer in [" +
                                          std::to_string(lo) + ", " +
                                          std::to_string(hi) + "]");
  }
  return v.get<int>();
}

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw Error(ErrorCode::kBadInput, where + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorCode::kBadInput, where + " is not finite");
  return d;
}

}  // namespace

std::shared_ptr<const SparseOracleMatrix> CooMatrix::to_oracle() const {
  return std::make_shared<const SparseOracleMatrix>(
      SparseOracleMatrix::from_upper_entries(num_qubits, entries, max_norm));
}

InputKind detect_input_kind(const std::string& text) {
  const json doc = parse_document(text);
  if (doc.is_object() && doc.contains("entries")) return InputKind::kCoo;
  if (doc.is_object() && doc.contains("terms")) return InputKind::kMonomials;
  throw Error(ErrorCode::kBadInput,
              "input has neither \"entries\" (COO) nor \"terms\" (monomials)");
}

CooMatrix parse_coo(const std::string& text) {
  const json doc = parse_document(text);
  CooMatrix out;
  out.num_qubits = small_count(require(doc, "num_qubits"), "num_qubits", 1, 62);
  if (doc.contains("max_norm") && !doc.at("max_norm").is_null()) {
    out.max_norm = finite_number(doc.at("max_norm"), "max_norm");
  }
  const json& entries = require(doc, "entries");
  if (!entries.is_array()) throw Error(ErrorCode::kBadInput, "entries must be an array");

  const BasisIndex dim = BasisIndex{1} << out.num_qubits;
  std::map<std::pair<BasisIndex, BasisIndex>, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entry #" + std::to_string(i);
    const json& e = entries[i];
    if (!e.is_array() || e.size() != 4) {
      throw Error(ErrorCode::kBadInput, where + " must be [x, y, re, im]");
    }
    for (int k = 0; k < 2; ++k) {
      if (!e[k].is_number_unsigned() || e[k].get<BasisIndex>() >= dim) {
        throw Error(ErrorCode::kBadInput,
                    where + " has an index outside [0, " + std::to_string(dim) + ")");
      }
    }
    const auto x = e[0].get<BasisIndex>();
    const auto y = e[1].get<BasisIndex>();
    const Complex v{finite_number(e[2], where + " re"), finite_number(e[3], where + " im")};
    if (auto it = seen.find({y, x}); it != seen.end() && x != y) {
      throw Error(ErrorCode::kBadInput,
                  where + " (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") mirrors entry #" + std::to_string(it->second) +
                      "; give each pair once with x <= y");
    }
    if (auto it = seen.find({x, y}); it != seen.end()) {
      throw Error(ErrorCode::kBadInput,
                  where + " repeats entry #" + std::to_string(it->second));
    }
    seen[{x, y}] = i;
    out.entries.emplace_back(x, y, v);
  }
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    const auto& [x, y, v] = out.entries[i];
    if (x > y) {
      throw Error(ErrorCode::kBadInput,
                  "entry #" + std::to_string(i) +
                      " lies below the diagonal; only x <= y is accepted");
    }
    if (x == y && v.imag() != 0.0) {
      throw Error(ErrorCode::kNonHermitian,
                  "entry #" + std::to_string(i) + " is a diagonal entry with a "
                  "nonzero imaginary part");
    }
  }
  return out;
}

MonomialSystem parse_monomials(const std::string& text) {
  const json doc = parse_document(text);
  MonomialSystem out;
  out.num_modes = small_count(require(doc, "num_modes"), "num_modes", 1, 62);
  const json& terms = require(doc, "terms");
  if (!terms.is_array()) throw Error(ErrorCode::kBadInput, "terms must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "monomial #" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_object() || !t.contains("coeff") || !t.contains("ops")) {
      throw Error(ErrorCode::kBadInput, where + " needs \"coeff\" and \"ops\"");
    }
    const json& c = t.at("coeff");
    LadderMonomial m;
    if (c.is_array() && c.size() == 2) {
      m.coefficient = {finite_number(c[0], where + " coeff re"),
                       finite_number(c[1], where + " coeff im")};
    } else {
      m.coefficient = finite_number(c, where + " coeff");
    }
    const json& ops = t.at("ops");
    if (!ops.is_array() || ops.empty()) {
      throw Error(ErrorCode::kBadInput, where + " has no operators");
    }
    for (const json& op : ops) {
      if (!op.is_array() || op.size() != 2 || !op[0].is_string()) {
        throw Error(ErrorCode::kBadInput, where + " has an operator that is not [\"+\"|\"-\", mode]");
      }
      const std::string kind = op[0].get<std::string>();
      if (kind != "+" && kind != "-") {
        throw Error(ErrorCode::kBadInput, where + " has operator kind \"" + kind + "\"");
      }
      const int mode = small_count(op[1], (where + " mode").c_str(), 0, out.num_modes - 1);
      m.ops.push_back(kind == "+" ? LadderOp::create(mode) : LadderOp::annihilate(mode));
    }
    out.monomials.push_back(std::move(m));
  }
  return out;
}

AnsatzTemplate parse_ansatz_template(const std::string& text) {
  const json doc = parse_document(text);
  AnsatzTemplate t;
  t.layers = small_count(require(doc, "layers"), "layers", 0, 1000);
  if (doc.contains("entangler")) {
    const json& e = doc.at("entangler");
    if (e == "cnot_ring") {
      t.entangler = AnsatzTemplate::Entangler::kCnotRing;
    } else if (e == "cz_line") {
      t.entangler = AnsatzTemplate::Entangler::kCzLine;
    } else {
      throw Error(ErrorCode::kBadInput, "entangler must be \"cnot_ring\" or \"cz_line\"");
    }
  }
  if (doc.contains("rotations")) {
    const json& r = doc.at("rotations");
    if (!r.is_array() || r.empty()) {
      throw Error(ErrorCode::kBadInput, "rotations must be a nonempty array");
    }
    t.rotations.clear();
    for (const json& name : r) {
      if (name == "rx") {
        t.rotations.push_back(GateKind::kRX);
      } else if (name == "ry") {
        t.rotations.push_back(GateKind::kRY);
      } else if (name == "rz") {
        t.rotations.push_back(GateKind::kRZ);
      } else {
        throw Error(ErrorCode::kBadInput, "unknown rotation " + name.dump());
      }
    }
  }
  return t;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace svqe
