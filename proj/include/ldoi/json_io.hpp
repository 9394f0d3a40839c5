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

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ldoi/discriminate.hpp"
#include "ldoi/entangle.hpp"
#include "ldoi/hadamardness.hpp"
#include "ldoi/special.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"

namespace ldoi {

// Triple interchange format, the unit of all CLI I/O:
//   {"d": n, "A": [[[re, im], ...], ...], "B": ..., "C": ...}   (row-major)

nlohmann::json triple_to_json(const MatrixTriple& t);
MatrixTriple triple_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
/// Accepts [[[re, im], ...], ...] or plain real [[x, ...], ...].
Matrix matrix_from_json(const nlohmann::json& j);

/// Interleaved re,im columns, one operator row per line.
void write_dense_csv(std::ostream& os, const Matrix& m);

/// Rows of '+'/'-' characters (whitespace ignored), e.g. "++-\n+-+\n-++".
SignMatrix sign_matrix_from_text(const std::string& text);

nlohmann::json report_to_json(const UnitarityReport& r);
nlohmann::json report_to_json(const DualityReport& r);
nlohmann::json report_to_json(const PerfectWitness& w);
nlohmann::json report_to_json(const EntanglementProfile& p);
nlohmann::json report_to_json(const SearchResult& r);

/// Reads from a file, or from stdin when the path is "-".
std::string slurp(const std::string& path);
MatrixTriple load_triple(const std::string& path);

/// FNV-1a digest of a string, hex-encoded; used for run manifests.
std::string fnv1a_hex(const std::string& payload);

}  // namespace ldoi
