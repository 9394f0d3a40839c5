// Copyright 2026 The ldoi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldoi/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace ldoi {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ValidationError("complex entry must be a number or [re, im]");
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ValidationError("matrix must be a nonempty array of rows");
  const auto rows = Eigen::Index(j.size());
  const auto cols = Eigen::Index(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (Eigen::Index(j[std::size_t(i)].size()) != cols)
      throw ValidationError("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = complex_from_json(j[std::size_t(i)][std::size_t(c)]);
  }
  return m;
}

json triple_to_json(const MatrixTriple& t) {
  return json{{"d", t.dim},
              {"A", matrix_to_json(t.A)},
              {"B", matrix_to_json(t.B)},
              {"C", matrix_to_json(t.C)}};
}

MatrixTriple triple_from_json(const json& j) {
  if (!j.contains("d") || !j.contains("A") || !j.contains("B") ||
      !j.contains("C"))
    throw ValidationError("triple JSON needs fields d, A, B, C");
  MatrixTriple t;
  t.dim = j["d"].get<int>();
  t.A = matrix_from_json(j["A"]);
  t.B = matrix_from_json(j["B"]);
  t.C = matrix_from_json(j["C"]);
  if (t.A.rows() != t.dim || t.B.rows() != t.dim || t.C.rows() != t.dim ||
      t.A.cols() != t.dim || t.B.cols() != t.dim || t.C.cols() != t.dim)
    throw StructuralError("matrix shapes do not match the declared d");
  return t;
}

void write_dense_csv(std::ostream& os, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).real() << ',' << m(i, j).imag();
    }
    os << '\n';
  }
}

SignMatrix sign_matrix_from_text(const std::string& text) {
  std::vector<std::uint32_t> rows;
  std::uint32_t row = 0;
  int col = 0, width = -1;
  auto close_row = [&]() {
    if (col == 0) return;
    if (width < 0) width = col;
    if (col != width) throw ValidationError("ragged sign-matrix rows");
    rows.push_back(row);
    row = 0;
    col = 0;
  };
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      if (col >= 32) throw ValidationError("sign matrix wider than 32 columns");
      if (ch == '-') row |= 1u << unsigned(col);
      ++col;
    } else if (ch == '\n') {
      close_row();
    } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
      // separators are ignored
    } else {
      throw ValidationError(std::string("unexpected character '") + ch +
                            "' in sign-matrix grid");
    }
  }
  close_row();
  if (rows.empty() || int(rows.size()) != width)
    throw ValidationError("sign matrix must be square");
  SignMatrix m;
  m.dim = width;
  m.rows = std::move(rows);
  return m;
}

json report_to_json(const UnitarityReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.phase_witnesses) {
    json entry{{"i", w.i}, {"j", w.j}, {"present", w.present}};
    if (w.present) entry["omega"] = complex_to_json(w.omega);
    witnesses.push_back(std::move(entry));
  }
  return json{{"is_unitary", r.is_unitary},
              {"b_defect", r.b_defect},
              {"worst_pair", {r.worst_pair.first, r.worst_pair.second}},
              {"pair_defect", r.pair_defect},
              {"norm_defect", r.norm_defect},
              {"phase_defect", r.phase_defect},
              {"phase_witnesses", std::move(witnesses)}};
}

json report_to_json(const DualityReport& r) {
  return json{{"is_dual", r.is_dual},
              {"is_pt", r.is_pt},
              {"is_perfect", r.is_perfect},
              {"dual_conditions", r.dual_conditions},
              {"pt_conditions", r.pt_conditions},
              {"routes_agree", r.routes_agree},
              {"a_defect", r.a_defect},
              {"b_defect", r.b_defect},
              {"c_defect", r.c_defect},
              {"dual_modulus_defect", r.dual_modulus_defect},
              {"dual_phase_defect", r.dual_phase_defect},
              {"pt_modulus_defect", r.pt_modulus_defect},
              {"pt_phase_defect", r.pt_phase_defect}};
}

json report_to_json(const PerfectWitness& w) {
  const char* clause = "satisfied";
  switch (w.clause) {
    case PerfectWitness::Clause::Vacuous:
      clause = "vacuous";
      break;
    case PerfectWitness::Clause::Modulus:
      clause = "modulus";
      break;
    case PerfectWitness::Clause::PhaseContradiction:
      clause = "phase_contradiction";
      break;
    case PerfectWitness::Clause::Satisfied:
      clause = "satisfied";
      break;
  }
  return json{{"clause", clause},
              {"pair", {w.pair.first, w.pair.second}},
              {"matrix", std::string(1, w.matrix)},
              {"value", w.value},
              {"dual_phase_defect", w.dual_phase_defect},
              {"pt_phase_defect", w.pt_phase_defect},
              {"detail", w.detail}};
}

json report_to_json(const EntanglementProfile& p) {
  return json{{"operator_entanglement", p.e_op},
              {"operator_entanglement_swapped", p.e_op_swapped},
              {"entangling_power", p.e_power},
              {"gate_typicality", p.typicality}};
}

json report_to_json(const SearchResult& r) {
  return json{{"dim", r.dim},
              {"min_value", r.min_value},
              {"argmin_count", r.argmin_count},
              {"first_argmin", r.first_argmin.to_text()},
              {"elapsed_seconds", r.elapsed_seconds},
              {"kernel", r.kernel}};
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatrixTriple load_triple(const std::string& path) {
  return triple_from_json(json::parse(slurp(path)));
}

std::string fnv1a_hex(const std::string& payload) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : payload) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ldoi
