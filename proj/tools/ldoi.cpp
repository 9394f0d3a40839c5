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

// Command-line front end. Exit codes: 0 success, 2 validation failure,
// 3 numeric-tolerance failure, 4 usage error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldoi/discriminate.hpp"
#include "ldoi/embed.hpp"
#include "ldoi/entangle.hpp"
#include "ldoi/hadamardness.hpp"
#include "ldoi/json_io.hpp"
#include "ldoi/numerics.hpp"
#include "ldoi/schmidt.hpp"
#include "ldoi/special.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"

namespace {

using nlohmann::json;
using namespace ldoi;

constexpr const char* kVersion = "ldoi 1.0.0";

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw StructuralError("cannot write " + out_path);
  f << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw StructuralError("cannot write " + out_path);
  f << text;
}

// ---------------------------------------------------------------------------
// reproduce suites: rerun the headline computations and report measured vs
// expected values, with a manifest digest over the deterministic payload.

json reproduce_table1() {
  struct Row {
    int d;
    std::int64_t min;
    std::uint64_t count;
  };
  const Row expected[] = {{3, 33, 6}, {5, 145, 120}, {6, 264, 28800}};
  json rows = json::array();
  bool ok = true;
  for (const Row& row : expected) {
    const SearchResult r = exhaustive_min(row.d);
    const bool pass = r.min_value == row.min && r.argmin_count == row.count;
    ok = ok && pass;
    rows.push_back({{"d", row.d},
                    {"expected_min", row.min},
                    {"measured_min", r.min_value},
                    {"expected_argmin_count", row.count},
                    {"measured_argmin_count", r.argmin_count},
                    {"first_argmin", r.first_argmin.to_text()},
                    {"elapsed_seconds", r.elapsed_seconds},
                    {"pass", pass}});
  }
  return json{{"suite", "table1"}, {"pass", ok}, {"rows", std::move(rows)}};
}

json reproduce_max_ep() {
  json rows = json::array();
  bool ok = true;
  for (int d = 2; d <= 8; ++d) {
    const MaxEpResult r = max_ep_dual_ldui(fourier_matrix(d));
    const double expected = double(d) / (d + 1);
    const bool pass = r.is_max && std::abs(r.e_power - expected) <= 1e-10;
    ok = ok && pass;
    rows.push_back({{"d", d},
                    {"expected", expected},
                    {"measured", r.e_power},
                    {"hadamard", r.is_max},
                    {"pass", pass}});
  }
  return json{{"suite", "max-ep"}, {"pass", ok}, {"rows", std::move(rows)}};
}

json reproduce_schmidt_coverage() {
  json rows = json::array();
  bool ok = true;
  for (int d = 3; d <= 5; ++d) {
    json achieved = json::array();
    bool pass = true;
    for (int target = 1; target <= d * d; ++target) {
      const MatrixTriple t = make_rank(d, target, 1);
      const int formula = schmidt_rank(t);
      const int oracle = schmidt_coefficients(t).rank;
      pass = pass && formula == target && oracle == target &&
             check_unitary(t, Field::Real).is_unitary;
      achieved.push_back(formula);
    }
    ok = ok && pass;
    rows.push_back({{"d", d}, {"ranks", std::move(achieved)}, {"pass", pass}});
  }
  return json{
      {"suite", "schmidt-coverage"}, {"pass", ok}, {"rows", std::move(rows)}};
}

json reproduce_perfect_none() {
  bool ok = true;
  json rows = json::array();
  const int per_dim = 2000;
  for (int d = 2; d <= 6; ++d) {
    int certified = 0;
    for (int s = 0; s < per_dim; ++s) {
      const MatrixTriple t = random_unitary(
          d, InvarianceClass::LDOI, Field::Complex, derive_seed(99, s));
      const PerfectWitness w = perfect_witness(t);
      if (w.clause == PerfectWitness::Clause::Modulus ||
          w.clause == PerfectWitness::Clause::PhaseContradiction)
        ++certified;
    }
    const bool pass = certified == per_dim;
    ok = ok && pass;
    rows.push_back({{"d", d},
                    {"trials", per_dim},
                    {"certified", certified},
                    {"pass", pass}});
  }
  return json{
      {"suite", "perfect-none"}, {"pass", ok}, {"rows", std::move(rows)}};
}

// timing fields vary run to run and must not influence the digest
void strip_timings(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_seconds");
    for (auto& [key, value] : j.items()) strip_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timings(value);
  }
}

int run_reproduce(const std::string& name, const std::string& cmdline,
                  const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  json body;
  if (name == "table1")
    body = reproduce_table1();
  else if (name == "max-ep")
    body = reproduce_max_ep();
  else if (name == "schmidt-coverage")
    body = reproduce_schmidt_coverage();
  else if (name == "perfect-none")
    body = reproduce_perfect_none();
  else
    throw StructuralError("unknown suite: " + name);

  json digest_payload = body;
  strip_timings(digest_payload);
  json manifest{{"command", cmdline},
                {"version", kVersion},
                {"wall_seconds", std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count()},
                {"output_digest", fnv1a_hex(digest_payload.dump())}};
  json report = body;
  report["manifest"] = std::move(manifest);
  emit(report, out_path);
  return body["pass"].get<bool>() ? 0 : 3;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite operators invariant under local diagonal groups: "
               "triples, unitarity, duality, Schmidt ranks, entanglement, "
               "sign-matrix search, discrimination"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // --- sample ---------------------------------------------------------
  std::string s_class = "ldoi", s_field = "c", s_out;
  int s_dim = 3;
  std::uint64_t s_seed = 0;
  auto* sample = app.add_subcommand(
      "sample", "draw a random unitary triple of the given class");
  sample->add_option("--class", s_class, "ldoi|ldui|cldui");
  sample->add_option("--field", s_field, "c|r");
  sample->add_option("--dim", s_dim, "dimension d")->required();
  sample->add_option("--seed", s_seed, "RNG seed")->required();
  sample->add_option("-o,--output", s_out, "output file (default stdout)");

  // --- check ----------------------------------------------------------
  std::string c_in = "-", c_field = "c", c_out;
  auto* check = app.add_subcommand(
      "check", "unitarity report for a triple (JSON on stdin or file)");
  check->add_option("input", c_in, "triple JSON file or -");
  check->add_option("--field", c_field, "c|r");
  check->add_option("-o,--output", c_out, "output file");

  // --- embed ----------------------------------------------------------
  std::string e_in = "-", e_format = "json", e_out;
  auto* emb =
      app.add_subcommand("embed", "dense d^2 x d^2 operator of a triple");
  emb->add_option("input", e_in, "triple JSON file or -");
  emb->add_option("--format", e_format, "json|csv");
  emb->add_option("-o,--output", e_out, "output file");

  // --- dual -----------------------------------------------------------
  auto* dual = app.add_subcommand("dual", "dual/PT unitary tooling");
  dual->require_subcommand(1);
  std::string dm_family = "projection", dm_omega = "1,0", dm_out;
  int dm_dim = 3, dm_rank = -1;
  std::uint64_t dm_seed = 0;
  auto* dual_make =
      dual->add_subcommand("make", "construct a dual unitary triple");
  dual_make->add_option("--family", dm_family,
                        "projection|phase-projection|ldui");
  dual_make->add_option("--dim", dm_dim, "dimension d")->required();
  dual_make->add_option("--omega", dm_omega,
                        "pair phase re,im (phase-projection)");
  dual_make->add_option("--rank", dm_rank,
                        "projection rank (default floor(d/2))");
  dual_make->add_option("--seed", dm_seed, "seed for the random projection")
      ->required();
  dual_make->add_option("-o,--output", dm_out, "output file");
  std::string dc_in = "-", dc_out;
  auto* dual_check = dual->add_subcommand("check", "duality report");
  dual_check->add_option("input", dc_in, "triple JSON file or -");
  dual_check->add_option("-o,--output", dc_out, "output file");

  // --- schmidt --------------------------------------------------------
  auto* schmidt = app.add_subcommand("schmidt", "operator Schmidt analysis");
  schmidt->require_subcommand(1);
  std::string sr_in = "-";
  auto* schmidt_rank_cmd = schmidt->add_subcommand("rank", "Schmidt rank");
  schmidt_rank_cmd->add_option("input", sr_in, "triple JSON file or -");
  std::string ss_in = "-", ss_out;
  auto* schmidt_spec =
      schmidt->add_subcommand("spectrum", "Schmidt coefficients");
  schmidt_spec->add_option("input", ss_in, "triple JSON file or -");
  schmidt_spec->add_option("-o,--output", ss_out, "output file");
  int sm_dim = 3, sm_rank = 1;
  std::uint64_t sm_seed = 0;
  std::string sm_out;
  auto* schmidt_make = schmidt->add_subcommand(
      "make", "orthogonal triple with a prescribed Schmidt rank");
  schmidt_make->add_option("--dim", sm_dim, "dimension d >= 3")->required();
  schmidt_make->add_option("--rank", sm_rank, "target rank in 1..d^2")
      ->required();
  schmidt_make->add_option("--seed", sm_seed, "construction seed")
      ->required();
  schmidt_make->add_option("-o,--output", sm_out, "output file");

  // --- entangle -------------------------------------------------------
  auto* entangle = app.add_subcommand("entangle", "non-locality measures");
  entangle->require_subcommand(1);
  std::string ep_in = "-", ep_out;
  bool ep_oracle = false;
  auto* ent_profile = entangle->add_subcommand(
      "profile", "operator entanglement, entangling power, typicality");
  ent_profile->add_option("input", ep_in, "triple JSON file or -");
  ent_profile->add_flag("--oracle", ep_oracle,
                        "force the dense realignment path");
  ent_profile->add_option("-o,--output", ep_out, "output file");

  // --- hadamardness ---------------------------------------------------
  auto* had =
      app.add_subcommand("hadamardness", "Tr[(CC')^2] on sign matrices");
  had->require_subcommand(1);
  int hm_dim = 3, hm_workers = 0;
  std::string hm_out;
  auto* had_min = had->add_subcommand(
      "min", "exhaustive minimum over dephased sign matrices");
  had_min->add_option("--dim", hm_dim, "2 <= d <= 6")->required();
  had_min->add_option("--workers", hm_workers, "thread count (0 = auto)");
  had_min->add_option("-o,--output", hm_out, "output file");
  std::string he_in = "-", he_out;
  auto* had_eval = had->add_subcommand(
      "eval", "evaluate the functional on a matrix (JSON or +- grid)");
  had_eval->add_option("input", he_in, "matrix file or -");
  had_eval->add_option("-o,--output", he_out, "output file");

  // --- discriminate ---------------------------------------------------
  auto* disc = app.add_subcommand("discriminate",
                                  "copy counts and local numerical range");
  disc->require_subcommand(1);
  std::string dk_a, dk_b, dk_out;
  auto* disc_k = disc->add_subcommand(
      "k", "copies needed to discriminate two unitary triples");
  disc_k->add_option("--a", dk_a, "first triple JSON")->required();
  disc_k->add_option("--b", dk_b, "second triple JSON")->required();
  disc_k->add_option("-o,--output", dk_out, "output file");
  std::string dl_in = "-", dl_out;
  int dl_samples = 1000;
  std::uint64_t dl_seed = 0;
  auto* disc_lr =
      disc->add_subcommand("local-range", "sample the local numerical range");
  disc_lr->add_option("input", dl_in, "triple JSON file or -");
  disc_lr->add_option("--samples", dl_samples, "number of probe states")
      ->required();
  disc_lr->add_option("--seed", dl_seed, "RNG seed")->required();
  disc_lr->add_option("-o,--output", dl_out, "CSV output file");

  // --- reproduce ------------------------------------------------------
  std::string r_name, r_out;
  auto* repro = app.add_subcommand(
      "reproduce", "rerun a headline suite and report measured vs expected");
  repro
      ->add_option("name", r_name,
                   "table1|schmidt-coverage|max-ep|perfect-none")
      ->required();
  repro->add_option("-o,--output", r_out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (sample->parsed()) {
      const MatrixTriple t =
          random_unitary(s_dim, invariance_class_from_string(s_class),
                         field_from_string(s_field), s_seed);
      emit(triple_to_json(t), s_out);
    } else if (check->parsed()) {
      const MatrixTriple t = load_triple(c_in);
      emit(report_to_json(check_unitary(t, field_from_string(c_field))),
           c_out);
    } else if (emb->parsed()) {
      const MatrixTriple t = load_triple(e_in);
      require_valid(t);
      const Matrix x = embed(t);
      if (e_format == "csv") {
        std::ostringstream ss;
        write_dense_csv(ss, x);
        emit_text(ss.str(), e_out);
      } else if (e_format == "json") {
        emit(matrix_to_json(x), e_out);
      } else {
        throw StructuralError("unknown format: " + e_format);
      }
    } else if (dual_make->parsed()) {
      MatrixTriple t;
      if (dm_family == "ldui") {
        t = make_dual_ldui(fourier_matrix(dm_dim));
      } else {
        Rng rng(derive_seed(dm_seed, 0xd0a1));
        const int rank = dm_rank < 0 ? dm_dim / 2 : dm_rank;
        const Matrix p = haar_projection(dm_dim, rank, rng);
        if (dm_family == "projection") {
          t = make_dual_projection(p);
        } else if (dm_family == "phase-projection") {
          double re = 1.0, im = 0.0;
          if (std::sscanf(dm_omega.c_str(), "%lf,%lf", &re, &im) != 2)
            throw StructuralError("--omega expects re,im");
          t = make_dual_phase_projection(p, Complex(re, im));
        } else {
          throw StructuralError("unknown family: " + dm_family);
        }
      }
      emit(triple_to_json(t), dm_out);
    } else if (dual_check->parsed()) {
      emit(report_to_json(check_special(load_triple(dc_in))), dc_out);
    } else if (schmidt_rank_cmd->parsed()) {
      std::cout << schmidt_rank(load_triple(sr_in)) << "\n";
    } else if (schmidt_spec->parsed()) {
      const SchmidtSpectrum s = schmidt_coefficients(load_triple(ss_in));
      emit(json{{"rank", s.rank}, {"coefficients", s.coefficients}}, ss_out);
    } else if (schmidt_make->parsed()) {
      emit(triple_to_json(make_rank(sm_dim, sm_rank, sm_seed)), sm_out);
    } else if (ent_profile->parsed()) {
      const MatrixTriple t = load_triple(ep_in);
      const EntanglementProfile p =
          ep_oracle ? profile_oracle(t) : profile_closed_form(t);
      emit(report_to_json(p), ep_out);
    } else if (had_min->parsed()) {
      emit(report_to_json(exhaustive_min(hm_dim, hm_workers)), hm_out);
    } else if (had_eval->parsed()) {
      const std::string text = slurp(he_in);
      json out;
      bool parsed_json = true;
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error&) {
        parsed_json = false;
      }
      if (parsed_json) {
        const Matrix m = matrix_from_json(j);
        bool sign_only = is_real(m) && m.rows() == m.cols();
        for (Eigen::Index i = 0; sign_only && i < m.rows(); ++i)
          for (Eigen::Index c = 0; sign_only && c < m.cols(); ++c)
            if (std::abs(std::abs(m(i, c).real()) - 1.0) > kEqTol)
              sign_only = false;
        if (sign_only) {
          SignMatrix sm;
          sm.dim = int(m.rows());
          sm.rows.assign(std::size_t(sm.dim), 0u);
          for (int i = 0; i < sm.dim; ++i)
            for (int c = 0; c < sm.dim; ++c)
              if (m(i, c).real() < 0)
                sm.rows[std::size_t(i)] |= 1u << unsigned(c);
          out = json{{"h", h_measure(sm)}, {"exact", true}};
        } else {
          out = json{{"h", h_measure(m)}, {"exact", false}};
        }
      } else {
        out = json{{"h", h_measure(sign_matrix_from_text(text))},
                   {"exact", true}};
      }
      emit(out, he_out);
    } else if (disc_k->parsed()) {
      const MatrixTriple a = load_triple(dk_a);
      const MatrixTriple b = load_triple(dk_b);
      const CopyCount direct = k_copies(a, b);
      const CopyCount bound = k_bound(a, b);
      json out{{"equal_spectrum", direct.equal_spectrum}};
      if (!direct.equal_spectrum) out["k"] = direct.k;
      out["bound_equal_spectrum"] = bound.equal_spectrum;
      if (!bound.equal_spectrum) out["k_bound"] = bound.k;
      emit(out, dk_out);
    } else if (disc_lr->parsed()) {
      const LocalRangeSample s =
          local_range_sample(load_triple(dl_in), dl_samples, dl_seed);
      std::ostringstream ss;
      for (const Complex& z : s.values)
        ss << z.real() << ',' << z.imag() << '\n';
      ss << "# min_abs," << s.min_abs << '\n';
      emit_text(ss.str(), dl_out);
    } else if (repro->parsed()) {
      return run_reproduce(r_name, join_args(argc, argv), r_out);
    }
  } catch (const StructuralError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ToleranceError& e) {
    std::cerr << "tolerance error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
