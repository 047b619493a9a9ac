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

#include "qrover/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "qrover/error.h"

namespace qrover::io {

namespace fs = std::filesystem;

namespace {

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

// Arrays of scalars, or of arrays of scalars, stay on one line.
bool is_compact(const Json& v) {
  if (!v.is_array()) return false;
  for (const Json& e : v) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (const Json& x : e) {
        if (!is_scalar(x)) return false;
      }
    }
  }
  return true;
}

void emit(const Json& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + "  " + Json(it.key()).dump() + ": ";
        emit(it.value(), indent + 2, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (is_compact(v)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          emit(v[i], indent, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad + "  ";
        emit(v[i], indent + 2, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) throw Error(ErrorCode::kIo, "cannot serialize a non-finite number");
      out += format_real(d);
      return;
    }
    default:
      out += v.dump();
  }
}

[[noreturn]] void bad(std::string_view what, const std::string& msg) {
  throw Error(ErrorCode::kManifest, std::string(what) + ": " + msg);
}

const Json& field(const Json& obj, const char* key, std::string_view what) {
  if (!obj.is_object()) bad(what, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(what, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& obj, const char* key, std::string_view what) {
  const Json& v = field(obj, key, what);
  if (!v.is_number()) bad(what, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::int64_t integer(const Json& obj, const char* key, std::string_view what) {
  const Json& v = field(obj, key, what);
  if (!v.is_number_integer()) bad(what, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string text(const Json& obj, const char* key, std::string_view what) {
  const Json& v = field(obj, key, what);
  if (!v.is_string()) bad(what, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

void check_schema(const Json& j, std::string_view what) {
  if (text(j, "schema_version", what) != kSchemaVersion) {
    bad(what, "unsupported schema_version (expected " + std::string(kSchemaVersion) + ")");
  }
}

Complex complex_from_json(const Json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad(what, "complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json optional_real(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> optional_real_from(const Json& obj, const char* key,
                                         std::string_view what) {
  const Json& v = field(obj, key, what);
  if (v.is_null()) return std::nullopt;
  return number(obj, key, what);
}

}  // namespace

std::string to_text(const Json& value) {
  std::string out;
  emit(value, 0, out);
  out += "\n";
  return out;
}

Json parse_text(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    bad(what, e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::kIo, "short write to " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot replace " + path.string());
  }
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, std::string_view what) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad(what, "matrix must be a list of rows");
  const std::size_t cols = j[0].size();
  CMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad(what, "matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k], what);
  }
  return m;
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector vector_from_json(const Json& j, std::string_view what) {
  if (!j.is_array() || j.empty()) bad(what, "vector must be a non-empty list");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i], what);
  return v;
}

Json noise_to_json(const NoiseSpec& noise) {
  Json j = Json::object();
  j["kind"] = std::string(noise_kind_name(noise.kind));
  j["p"] = noise.p;
  j["placement"] = std::string(placement_name(noise.placement));
  j["seed"] = noise.seed;
  if (noise.kind == NoiseKind::kCustom) {
    Json ops = Json::array();
    for (const CMatrix& k : noise.custom_kraus) ops.push_back(matrix_to_json(k));
    j["kraus"] = std::move(ops);
  }
  return j;
}

NoiseSpec noise_from_json(const Json& j) {
  const std::string_view what = "noise";
  NoiseSpec n;
  try {
    n.kind = noise_kind_from_name(text(j, "kind", what));
    n.placement = placement_from_name(text(j, "placement", what));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kManifest) throw;
    bad(what, e.what());
  }
  n.p = number(j, "p", what);
  const Json& seed = field(j, "seed", what);
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    bad(what, "seed must be a non-negative integer");
  }
  n.seed = seed.get<std::uint64_t>();
  if (n.kind == NoiseKind::kCustom) {
    const Json& ops = field(j, "kraus", what);
    if (!ops.is_array()) bad(what, "kraus must be a list of matrices");
    for (const Json& k : ops) n.custom_kraus.push_back(matrix_from_json(k, what));
  }
  return n;
}

Json manifest_to_json(const ModelManifest& m) {
  Json j = Json::object();
  j["schema_version"] = std::string(kSchemaVersion);
  j["qasm_path"] = m.qasm_path;
  Json povm = Json::array();
  for (int c = 0; c < m.povm.size(); ++c) {
    povm.push_back(Json{{"label", m.povm.labels[c]}, {"matrix", matrix_to_json(m.povm.elements[c])}});
  }
  j["povm"] = std::move(povm);
  if (m.noise) j["noise"] = noise_to_json(*m.noise);
  if (m.materialized_qasm_path) j["materialized_qasm_path"] = *m.materialized_qasm_path;
  j["metadata"] = m.metadata;
  return j;
}

ModelManifest manifest_from_json(const Json& j) {
  const std::string_view what = "manifest";
  check_schema(j, what);
  ModelManifest m;
  m.qasm_path = text(j, "qasm_path", what);
  const Json& povm = field(j, "povm", what);
  if (!povm.is_array()) bad(what, "povm must be a list");
  for (const Json& e : povm) {
    m.povm.labels.push_back(text(e, "label", what));
    m.povm.elements.push_back(matrix_from_json(field(e, "matrix", what), what));
  }
  if (j.contains("noise") && !j["noise"].is_null()) m.noise = noise_from_json(j["noise"]);
  if (j.contains("materialized_qasm_path")) {
    m.materialized_qasm_path = text(j, "materialized_qasm_path", what);
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad(what, "metadata must be an object");
    m.metadata = j["metadata"];
  }
  return m;
}

LoadedModel load_model(const fs::path& manifest_path) {
  ModelManifest manifest =
      manifest_from_json(parse_text(read_file(manifest_path), manifest_path.string()));
  const fs::path qasm = manifest_path.parent_path() / manifest.qasm_path;
  if (!fs::exists(qasm)) {
    throw Error(ErrorCode::kManifest, "missing qasm file " + qasm.string());
  }
  Circuit circuit = parse_qasm(read_file(qasm));
  manifest.povm.validate();
  if (manifest.povm.dim() != (1 << circuit.n_qubits)) {
    throw Error(ErrorCode::kInvalidPovm, "povm dimension does not match the circuit");
  }
  Classifier classifier = Classifier::from_circuit(circuit, manifest.povm, manifest.noise);
  return {std::move(manifest), std::move(circuit), std::move(classifier)};
}

void save_model(const fs::path& manifest_path, const Circuit& circuit, ModelManifest manifest) {
  const fs::path dir = manifest_path.parent_path();
  if (!dir.empty()) fs::create_directories(dir);
  const std::string stem = manifest_path.stem().string();
  manifest.qasm_path = stem + ".qasm";
  write_file_atomic(dir / manifest.qasm_path, emit_qasm(circuit));
  manifest.materialized_qasm_path.reset();
  if (manifest.noise && manifest.noise->placement == NoisePlacement::kRandom) {
    manifest.materialized_qasm_path = stem + ".noisy.qasm";
    write_file_atomic(dir / *manifest.materialized_qasm_path,
                      emit_qasm(expand_noise(circuit, manifest.noise)));
  }
  write_file_atomic(manifest_path, to_text(manifest_to_json(manifest)));
}

Json dataset_to_json(const LabeledDataset& data) {
  Json j = Json::object();
  j["schema_version"] = std::string(kSchemaVersion);
  j["name"] = data.name;
  j["n_qubits"] = data.n_qubits;
  if (data.encoding) j["encoding"] = std::string(encoding_name(*data.encoding));
  if (data.encoding_template) j["template_qasm"] = emit_qasm(*data.encoding_template);
  Json items = Json::array();
  for (const DatasetItem& item : data.items) {
    Json e = Json::object();
    e["kind"] = std::string(item_kind_name(item.kind));
    switch (item.kind) {
      case ItemKind::kDensity: e["payload"] = matrix_to_json(item.state.matrix()); break;
      case ItemKind::kPure: e["payload"] = vector_to_json(*item.amplitudes); break;
      case ItemKind::kFeatures: {
        Json x = Json::array();
        for (Eigen::Index i = 0; i < item.input->features.size(); ++i) {
          x.push_back(item.input->features(i));
        }
        e["payload"] = std::move(x);
        break;
      }
    }
    e["label"] = item.label;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

LabeledDataset dataset_from_json(const Json& j) {
  const std::string_view what = "dataset";
  check_schema(j, what);
  LabeledDataset data;
  data.name = j.contains("name") ? text(j, "name", what) : "";
  const std::int64_t n = integer(j, "n_qubits", what);
  if (n < 1 || n > 16) bad(what, "n_qubits must lie in [1, 16]");
  data.n_qubits = static_cast<int>(n);
  const long dim = 1L << n;
  if (j.contains("encoding")) {
    try {
      data.encoding = encoding_from_name(text(j, "encoding", what));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kManifest) throw;
      bad(what, e.what());
    }
  }
  if (j.contains("template_qasm")) {
    data.encoding_template = parse_qasm(text(j, "template_qasm", what));
    if (data.encoding_template->n_qubits != data.n_qubits) {
      throw Error(ErrorCode::kDimMismatch, "template qubit count differs from n_qubits");
    }
  }
  if (data.encoding == Encoding::kCircuit && !data.encoding_template) {
    bad(what, "circuit encoding needs template_qasm");
  }
  const Json& items = field(j, "items", what);
  if (!items.is_array()) bad(what, "items must be a list");
  for (const Json& e : items) {
    const std::string kind = text(e, "kind", what);
    std::string label = text(e, "label", what);
    const Json& payload = field(e, "payload", what);
    if (kind == "density") {
      CMatrix m = matrix_from_json(payload, what);
      if (m.rows() != dim || m.cols() != dim) {
        throw Error(ErrorCode::kDimMismatch, "density payload does not match n_qubits");
      }
      data.items.push_back(DatasetItem::density(DensityMatrix(m), std::move(label)));
    } else if (kind == "pure") {
      CVector v = vector_from_json(payload, what);
      if (v.size() != dim) throw Error(ErrorCode::kDimMismatch, "pure payload does not match n_qubits");
      data.items.push_back(DatasetItem::pure(v, std::move(label)));
    } else if (kind == "features") {
      if (!data.encoding) bad(what, "features items need a dataset encoding");
      if (!payload.is_array() || payload.empty()) bad(what, "features payload must be a list");
      RVector x(payload.size());
      for (std::size_t i = 0; i < payload.size(); ++i) {
        if (!payload[i].is_number()) bad(what, "features must be numbers");
        x(i) = payload[i].get<double>();
      }
      if (*data.encoding == Encoding::kAmplitude && x.size() != dim) {
        throw Error(ErrorCode::kDimMismatch, "amplitude features do not match n_qubits");
      }
      data.items.push_back(DatasetItem::features(data.encode(x), std::move(label)));
    } else {
      bad(what, "unknown item kind '" + kind + "'");
    }
  }
  return data;
}

LabeledDataset load_dataset(const fs::path& path) {
  return dataset_from_json(parse_text(read_file(path), path.string()));
}

void save_dataset(const fs::path& path, const LabeledDataset& data) {
  write_file_atomic(path, to_text(dataset_to_json(data)));
}

Json report_to_json(const VerificationReport& report, bool include_timing) {
  Json j = Json::object();
  j["schema_version"] = std::string(kSchemaVersion);
  j["kind"] = "verification_report";
  j["epsilon"] = report.epsilon;
  j["method"] = std::string(method_name(report.method));
  j["labels"] = report.labels;
  j["n_items"] = report.items.size();
  j["correctly_classified"] = report.correctly_classified();
  j["robust_accuracy"] = optional_real(report.robust_accuracy);
  j["under_robust_accuracy"] = optional_real(report.under_robust_accuracy);
  j["sdp_calls"] = report.sdp_calls;
  j["misclassified"] = report.misclassified;
  Json items = Json::array();
  for (const ItemReport& r : report.items) {
    Json e = Json::object();
    e["index"] = r.index;
    e["label"] = report.labels.at(r.label);
    e["predicted"] = report.labels.at(r.predicted);
    e["rlb"] = r.rlb;
    if (!r.optimal) {
      e["optimal"] = nullptr;
    } else if (r.optimal->is_infinite()) {
      e["optimal"] = "infinite";
    } else {
      e["optimal"] = r.optimal->value();
    }
    e["rub"] = optional_real(r.rub);
    e["verdict"] = std::string(verdict_name(r.verdict));
    e["boundary"] = r.boundary;
    e["witness_ref"] = r.witness_ref ? Json(*r.witness_ref) : Json(nullptr);
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  j["adversarial_count"] = report.adversarial_set.size();
  if (include_timing) {
    j["timing"] = Json{{"lower_bound_seconds", report.timing.lower_bound_seconds},
                       {"sdp_seconds", report.timing.sdp_seconds}};
  }
  return j;
}

VerificationReport report_from_json(const Json& j) {
  const std::string_view what = "report";
  check_schema(j, what);
  VerificationReport r;
  r.epsilon = number(j, "epsilon", what);
  try {
    r.method = method_from_name(text(j, "method", what));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kManifest) throw;
    bad(what, e.what());
  }
  const Json& labels = field(j, "labels", what);
  if (!labels.is_array()) bad(what, "labels must be a list");
  for (const Json& l : labels) {
    if (!l.is_string()) bad(what, "labels must be strings");
    r.labels.push_back(l.get<std::string>());
  }
  auto label_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      if (r.labels[i] == name) return static_cast<int>(i);
    }
    bad(what, "unknown label '" + name + "'");
  };
  r.robust_accuracy = optional_real_from(j, "robust_accuracy", what);
  r.under_robust_accuracy = optional_real_from(j, "under_robust_accuracy", what);
  r.sdp_calls = static_cast<int>(integer(j, "sdp_calls", what));
  for (const Json& m : field(j, "misclassified", what)) r.misclassified.push_back(m.get<int>());
  for (const Json& e : field(j, "items", what)) {
    ItemReport item;
    item.index = static_cast<int>(integer(e, "index", what));
    item.label = label_index(text(e, "label", what));
    item.predicted = label_index(text(e, "predicted", what));
    item.rlb = number(e, "rlb", what);
    const Json& opt = field(e, "optimal", what);
    if (opt.is_string()) {
      if (opt.get<std::string>() != "infinite") bad(what, "optimal must be a number or \"infinite\"");
      item.optimal = Radius::infinite();
    } else if (!opt.is_null()) {
      item.optimal = Radius::finite(number(e, "optimal", what));
    }
    item.rub = optional_real_from(e, "rub", what);
    try {
      item.verdict = verdict_from_name(text(e, "verdict", what));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kManifest) throw;
      bad(what, err.what());
    }
    const Json& boundary = field(e, "boundary", what);
    if (!boundary.is_boolean()) bad(what, "boundary must be a boolean");
    item.boundary = boundary.get<bool>();
    const Json& ref = field(e, "witness_ref", what);
    if (!ref.is_null()) item.witness_ref = static_cast<int>(integer(e, "witness_ref", what));
    r.items.push_back(item);
  }
  if (j.contains("timing")) {
    const Json& t = j["timing"];
    r.timing.lower_bound_seconds = number(t, "lower_bound_seconds", what);
    r.timing.sdp_seconds = number(t, "sdp_seconds", what);
  }
  return r;
}

fs::path witness_path(const fs::path& report_path) {
  fs::path p = report_path;
  p += ".witnesses.json";
  return p;
}

LabeledDataset witnesses_to_dataset(const VerificationReport& report) {
  LabeledDataset data;
  data.name = "witnesses";
  for (const AdversarialExample& ex : report.adversarial_set) {
    data.n_qubits = ex.witness.n_qubits();
    const ItemReport& item = report.items.at(ex.item_index);
    data.items.push_back(DatasetItem::density(ex.witness, report.labels.at(item.label)));
  }
  return data;
}

void save_report(const fs::path& path, const VerificationReport& report, bool include_timing) {
  Json j = report_to_json(report, include_timing);
  const fs::path witnesses = witness_path(path);
  if (report.adversarial_set.empty()) {
    std::error_code ec;
    fs::remove(witnesses, ec);
  } else {
    Json w = dataset_to_json(witnesses_to_dataset(report));
    for (std::size_t i = 0; i < report.adversarial_set.size(); ++i) {
      const AdversarialExample& ex = report.adversarial_set[i];
      w["items"][i]["source_index"] = ex.item_index;
      w["items"][i]["target_label"] =
          ex.target_label ? Json(report.labels.at(*ex.target_label)) : Json(nullptr);
    }
    write_file_atomic(witnesses, to_text(w));
    j["adversarial_file"] = witnesses.filename().string();
  }
  write_file_atomic(path, to_text(j));
}

namespace {

std::vector<AdversarialExample> witnesses_from_json(const Json& j,
                                                    const std::vector<std::string>& labels) {
  const std::string_view what = "witnesses";
  LabeledDataset data = dataset_from_json(j);
  std::vector<AdversarialExample> out;
  for (std::size_t i = 0; i < data.items.size(); ++i) {
    const Json& e = j["items"][i];
    AdversarialExample ex;
    ex.witness = data.items[i].state;
    ex.item_index = static_cast<int>(integer(e, "source_index", what));
    if (e.contains("target_label") && e["target_label"].is_string()) {
      const std::string target = e["target_label"].get<std::string>();
      auto it = std::find(labels.begin(), labels.end(), target);
      if (it != labels.end()) ex.target_label = static_cast<int>(it - labels.begin());
    }
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace

VerificationReport load_report(const fs::path& path) {
  Json j = parse_text(read_file(path), path.string());
  VerificationReport report = report_from_json(j);
  if (j.contains("adversarial_file")) {
    const fs::path witnesses = path.parent_path() / text(j, "adversarial_file", "report");
    report.adversarial_set =
        witnesses_from_json(parse_text(read_file(witnesses), witnesses.string()), report.labels);
  }
  return report;
}

std::vector<AdversarialExample> load_witnesses(const fs::path& path) {
  return witnesses_from_json(parse_text(read_file(path), path.string()), {});
}

Json benchmark_to_json(const BenchmarkResult& result) {
  Json j = Json::object();
  j["schema_version"] = std::string(kSchemaVersion);
  j["kind"] = "benchmark";
  j["task"] = result.task;
  j["n_qubits"] = result.n_qubits;
  j["seed"] = result.seed;
  j["train_accuracy_before"] = result.train_accuracy_before;
  j["train_accuracy_after"] = result.train_accuracy_after;
  j["adversarial_examples"] = result.adversarial_examples;
  auto bounds = [](const SampleBounds& b) {
    Json e = Json::object();
    e["predicted"] = b.predicted;
    e["rlb"] = b.rlb;
    e["optimal"] = b.eps_star.is_infinite() ? Json("infinite") : Json(b.eps_star.value());
    e["rub"] = optional_real(b.rub);
    e["gap"] = optional_real(b.gap());
    return e;
  };
  Json rows = Json::array();
  for (const BenchmarkRow& row : result.rows) {
    Json e = Json::object();
    e["index"] = row.index;
    e["label"] = row.label;
    Json x = Json::array();
    for (Eigen::Index i = 0; i < row.features.size(); ++i) x.push_back(row.features(i));
    e["features"] = std::move(x);
    e["distribution"] = row.distribution;
    e["critical"] = row.critical;
    e["before"] = bounds(row.before);
    e["after"] = bounds(row.after);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["critical"] = result.critical;
  j["critical_rlb_before"] = result.critical_rlb_before;
  j["critical_rlb_after"] = result.critical_rlb_after;
  j["improvement_ratio"] = result.improvement_ratio;
  // Ratios from the original hardware runs, for context only.
  j["reference_improvement_ratio"] = result.task == "lcei" ? 4.74 : 4.22;
  return j;
}

}  // namespace qrover::io
