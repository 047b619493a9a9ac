// Copyright 2026 The qrover Authors
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

#ifndef QROVER_IO_H_
#define QROVER_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qrover/benchmark.h"
#include "qrover/channel.h"
#include "qrover/classifier.h"
#include "qrover/qasm.h"
#include "qrover/verify.h"

namespace qrover::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "qrover/1";

/// Canonical text: two-space indent, keys in insertion order, scalar-only
/// arrays on one line, reals as `%.17g`. Throws kIo on non-finite numbers.
std::string to_text(const Json& value);
/// Throws kManifest (tagged with `what`) on malformed JSON.
Json parse_text(std::string_view text, std::string_view what);

std::string read_file(const std::filesystem::path& path);
/// Writes a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, std::string_view what);
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j, std::string_view what);

Json noise_to_json(const NoiseSpec& noise);
NoiseSpec noise_from_json(const Json& j);

struct ModelManifest {
  /// Relative to the manifest's directory.
  std::string qasm_path;
  Povm povm;
  std::optional<NoiseSpec> noise;
  /// Optional sidecar with random-placement noise written out as markers.
  std::optional<std::string> materialized_qasm_path;
  Json metadata = Json::object();
};

Json manifest_to_json(const ModelManifest& m);
ModelManifest manifest_from_json(const Json& j);

struct LoadedModel {
  ModelManifest manifest;
  Circuit circuit;
  Classifier classifier;
};

/// Reads the manifest, parses the referenced QASM, validates the POVM and
/// compiles the channel with the manifest's noise. Throws kManifest,
/// ParseError or kInvalidPovm.
LoadedModel load_model(const std::filesystem::path& manifest_path);

/// Writes `<dir>/<stem>.qasm` and the manifest at `manifest_path`, plus the
/// materialized sidecar for random-placement noise.
void save_model(const std::filesystem::path& manifest_path, const Circuit& circuit,
                ModelManifest manifest);

Json dataset_to_json(const LabeledDataset& data);
/// Validates every item (PSD, trace, dimensions) with typed errors.
LabeledDataset dataset_from_json(const Json& j);
LabeledDataset load_dataset(const std::filesystem::path& path);
void save_dataset(const std::filesystem::path& path, const LabeledDataset& data);

Json report_to_json(const VerificationReport& report, bool include_timing = false);
/// Inverse of report_to_json; the adversarial set lives in the witness file.
VerificationReport report_from_json(const Json& j);

/// Witness file path used next to a report: `<report>.witnesses.json`.
std::filesystem::path witness_path(const std::filesystem::path& report_path);

/// Writes the report and, when the adversarial set is non-empty, the witness
/// dataset next to it (stale witness files are removed otherwise).
void save_report(const std::filesystem::path& path, const VerificationReport& report,
                 bool include_timing = false);
VerificationReport load_report(const std::filesystem::path& path);

/// Witness states with the labels of the items they attack, usable as
/// adversarial training data.
LabeledDataset witnesses_to_dataset(const VerificationReport& report);
std::vector<AdversarialExample> load_witnesses(const std::filesystem::path& path);

Json benchmark_to_json(const BenchmarkResult& result);

}  // namespace qrover::io

#endif  // QROVER_IO_H_
