// Copyright 2026 The qmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMUB_SERIALIZE_H
#define QMUB_SERIALIZE_H

#include <string>

#include "json.hpp"
#include "qmub/linalg.h"
#include "qmub/phase_matrix.h"

namespace qmub {

using Json = nlohmann::json;

inline constexpr const char *kSchemaVersion = "1";

enum class OutputFormat { kJson, kCsv, kPretty };

/// Throws std::invalid_argument for anything but json, csv, pretty.
OutputFormat parse_format(const std::string &name);

struct OutputDocument {
    std::string schema_version = kSchemaVersion;
    Json command;
    Json payload;
};

Json to_json(const OutputDocument &doc);
OutputDocument document_from_json(const Json &j);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string emit_json(const OutputDocument &doc);
OutputDocument parse_document(const std::string &text);

/// {"type": "phase_matrix", "dim", "amplitude": "1" | "1/sqrt(dim)", "entries": [[[num, den] | null]]}
Json phase_matrix_to_json(const PhaseMatrix &m);
PhaseMatrix phase_matrix_from_json(const Json &j);

/// {"type": "complex_matrix", "rows", "cols", "entries": [[[re, im]]]}
Json complex_matrix_to_json(const ComplexMatrix &m);
ComplexMatrix complex_matrix_from_json(const Json &j);

Json complex_to_json(Complex z);
Json complex_vector_to_json(const ComplexVector &v);

/// Header of repeated re,im column pairs, one matrix row per line.
std::string to_csv(const ComplexMatrix &m);

/// Entries as powers of q = exp(2 pi i / dim) where possible.
std::string pretty(const PhaseMatrix &m);
std::string pretty(const ComplexMatrix &m);

/// A JSON array of [re, im] pairs, or CSV with one "re,im" pair per line
/// (an optional header line is skipped). Throws std::runtime_error when malformed.
ComplexVector parse_signal(const std::string &text);
ComplexVector read_signal_file(const std::string &path);

}  // namespace qmub

#endif
