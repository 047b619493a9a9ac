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

#include "qrover/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "qrover/benchmark.h"
#include "qrover/error.h"
#include "qrover/io.h"
#include "qrover/parallel.h"
#include "qrover/train.h"
#include "qrover/verify.h"

namespace qrover {

namespace {

namespace fs = std::filesystem;
using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("--epsilon must satisfy 0 < E < 1");
}

void require_jobs(int jobs) {
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
}

// Rejects a malformed QROVER_SOLVER_TOL instead of silently using the default.
void check_solver_env() {
  const char* env = std::getenv("QROVER_SOLVER_TOL");
  if (!env) return;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0 && v < 1.0)) {
    throw UsageError("QROVER_SOLVER_TOL must be a number in (0, 1)");
  }
}

Json header(const char* kind) {
  Json j = Json::object();
  j["schema_version"] = std::string(io::kSchemaVersion);
  j["kind"] = kind;
  return j;
}

Json reals(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json radius_json(const Radius& r) {
  return r.is_infinite() ? Json("infinite") : Json(r.value());
}

void write_json(const std::optional<std::string>& path, const Json& j, std::ostream& out) {
  const std::string text = io::to_text(j);
  if (path) {
    io::write_file_atomic(*path, text);
  } else {
    out << text;
  }
}

struct Handler {
  std::function<int()> run;
};

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string model;
  std::string dataset;
  double epsilon = -1.0;
  std::string method = "mixed";
  std::string out;
  int jobs = 1;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  require_epsilon(a.epsilon);
  require_jobs(a.jobs);
  const Method method = method_from_name(a.method);
  io::LoadedModel model = io::load_model(a.model);
  LabeledDataset data = io::load_dataset(a.dataset);
  VerifyOptions options;
  options.jobs = a.jobs;
  VerificationReport report = verify_dataset(model.classifier, a.epsilon, data, method, options);
  io::save_report(a.out, report, a.timing);
  auto fmt = [](const std::optional<double>& v) { return v ? format_real(*v) : "n/a"; };
  out << "items " << report.items.size() << ", correctly classified "
      << report.correctly_classified() << ", URA " << fmt(report.under_robust_accuracy)
      << ", RA " << fmt(report.robust_accuracy) << ", SDP calls " << report.sdp_calls
      << ", non-robust " << report.adversarial_set.size() << "\n";
  return report.adversarial_set.empty() ? kExitOk : kExitNonRobust;
}

// verify-state ---------------------------------------------------------------

struct StateArgs {
  std::string model;
  std::string state;
  int index = 0;
  double epsilon = -1.0;
  std::optional<std::string> out;
};

int cmd_verify_state(const StateArgs& a, std::ostream& out) {
  require_epsilon(a.epsilon);
  io::LoadedModel model = io::load_model(a.model);
  LabeledDataset data = io::load_dataset(a.state);
  if (a.index < 0 || a.index >= data.size()) throw UsageError("--index out of range");
  const DatasetItem& item = data.items[a.index];
  const Classifier& cls = model.classifier;
  std::vector<double> dist = outcome_distribution(cls, item.state);
  StateVerdict v = verify_state(cls, a.epsilon, item.state);
  Json j = header("state_verdict");
  j["epsilon"] = a.epsilon;
  j["index"] = a.index;
  j["label"] = item.label;
  j["predicted"] = cls.povm.labels[argmax_label(dist)];
  j["distribution"] = dist;
  j["rlb"] = robustness_lower_bound(dist);
  j["optimal"] = radius_json(v.eps_star);
  j["robust"] = v.robust;
  j["boundary"] = v.boundary;
  j["target_label"] = v.target_label ? Json(cls.povm.labels[*v.target_label]) : Json(nullptr);
  j["witness"] = v.witness ? io::matrix_to_json(v.witness->matrix()) : Json(nullptr);
  write_json(a.out, j, out);
  return v.robust ? kExitOk : kExitNonRobust;
}

// lower-bound ----------------------------------------------------------------

struct LowerBoundArgs {
  std::string model;
  std::string dataset;
  std::optional<double> epsilon;
  std::optional<std::string> out;
};

int cmd_lower_bound(const LowerBoundArgs& a, std::ostream& out) {
  if (a.epsilon) require_epsilon(*a.epsilon);
  io::LoadedModel model = io::load_model(a.model);
  LabeledDataset data = io::load_dataset(a.dataset);
  const Classifier& cls = model.classifier;
  Json j = header("lower_bounds");
  j["epsilon"] = a.epsilon ? Json(*a.epsilon) : Json(nullptr);
  Json items = Json::array();
  for (int i = 0; i < data.size(); ++i) {
    std::vector<double> dist = outcome_distribution(cls, data.items[i].state);
    const int predicted = argmax_label(dist);
    const double rlb = robustness_lower_bound(dist);
    Json e = Json::object();
    e["index"] = i;
    e["label"] = data.items[i].label;
    e["predicted"] = cls.povm.labels[predicted];
    e["distribution"] = dist;
    e["rlb"] = rlb;
    if (a.epsilon) e["certified"] = cls.povm.labels[predicted] == data.items[i].label && rlb >= *a.epsilon;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  if (a.epsilon) {
    VerificationReport r = verify_dataset(cls, *a.epsilon, data, Method::kLowerBound);
    j["under_robust_accuracy"] =
        r.under_robust_accuracy ? Json(*r.under_robust_accuracy) : Json(nullptr);
  }
  write_json(a.out, j, out);
  return kExitOk;
}

// attack ---------------------------------------------------------------------

struct AttackArgs {
  std::string model;
  std::string dataset;
  std::string strategy = "mask-fgsm";
  double strength = 0.05;
  double mask_fraction = 1.0;
  int max_escalations = 10;
  std::optional<int> shots;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<std::string> out;
};

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  require_jobs(a.jobs);
  io::LoadedModel model = io::load_model(a.model);
  LabeledDataset data = io::load_dataset(a.dataset);
  AttackConfig cfg;
  cfg.strategy = strategy_from_name(a.strategy);
  cfg.strength = a.strength;
  cfg.mask_fraction = a.mask_fraction;
  cfg.max_escalations = a.max_escalations;
  cfg.shots = a.shots;
  cfg.seed = a.seed;
  const Classifier& cls = model.classifier;
  const int n = data.size();
  std::vector<std::optional<AttackResult>> results(n);
  parallel_for(n, a.jobs, [&](int i) {
    const DatasetItem& item = data.items[i];
    if (!item.input) return;
    AttackConfig c = cfg;
    c.seed = cfg.seed ^ static_cast<std::uint64_t>(i);
    results[i] = run_attack(cls, *item.input, c);
  });

  Json j = header("attack_report");
  j["strategy"] = a.strategy;
  j["strength"] = a.strength;
  j["mask_fraction"] = a.mask_fraction;
  j["max_escalations"] = a.max_escalations;
  j["shots"] = a.shots ? Json(*a.shots) : Json(nullptr);
  j["seed"] = a.seed;
  Json items = Json::array();
  int successes = 0;
  for (int i = 0; i < n; ++i) {
    const DatasetItem& item = data.items[i];
    Json e = Json::object();
    e["index"] = i;
    e["label"] = item.label;
    if (!results[i]) {
      e["attacked"] = false;
      items.push_back(std::move(e));
      continue;
    }
    const AttackResult& r = *results[i];
    e["attacked"] = true;
    e["predicted"] = cls.povm.labels[r.original_label];
    e["success"] = r.success;
    e["escalations"] = r.escalations_used;
    e["final_strength"] = r.final_strength;
    e["evaluations"] = r.evaluations;
    e["features"] = reals(item.input->features);
    if (r.success) {
      ++successes;
      e["adversarial_label"] = cls.povm.labels[*r.adversarial_label];
      e["rub"] = *r.rub;
      e["adversarial_features"] = reals(r.adversarial->features);
      e["feature_diff"] = reals(r.adversarial->features - item.input->features);
    }
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  j["success_count"] = successes;
  write_json(a.out, j, out);
  return successes > 0 ? kExitNonRobust : kExitOk;
}

// noise ----------------------------------------------------------------------

struct NoiseArgs {
  std::string model;
  std::string kind;
  double p = 0.0;
  std::string placement = "end";
  std::uint64_t seed = 0;
  std::optional<std::string> kraus;
  std::string out;
};

int cmd_noise(const NoiseArgs& a, std::ostream& out) {
  NoiseSpec spec;
  spec.kind = noise_kind_from_name(a.kind);
  spec.p = a.p;
  spec.placement = placement_from_name(a.placement);
  spec.seed = a.seed;
  if (spec.kind == NoiseKind::kCustom) {
    if (!a.kraus) throw UsageError("--kind custom requires --kraus");
    Json ops = io::parse_text(io::read_file(*a.kraus), *a.kraus);
    if (ops.is_object() && ops.contains("kraus")) ops = ops["kraus"];
    if (!ops.is_array()) throw Error(ErrorCode::kManifest, "kraus file must hold a list of matrices");
    for (const Json& k : ops) spec.custom_kraus.push_back(io::matrix_from_json(k, *a.kraus));
  } else if (a.kraus) {
    throw UsageError("--kraus is only valid with --kind custom");
  }
  io::LoadedModel model = io::load_model(a.model);
  spec.validate(model.circuit.n_qubits);
  Circuit circuit = model.circuit;
  if (model.manifest.noise) {
    if (model.manifest.noise->kind == NoiseKind::kCustom) {
      throw UsageError("model already carries custom noise");
    }
    circuit = expand_noise(circuit, model.manifest.noise);
  }
  io::ModelManifest manifest = model.manifest;
  manifest.noise = spec;
  // Compiles once so an invalid combination fails before anything is written.
  Classifier::from_circuit(circuit, manifest.povm, spec);
  io::save_model(a.out, circuit, manifest);
  out << "wrote " << a.out << "\n";
  return kExitOk;
}

// train ----------------------------------------------------------------------

struct TrainArgs {
  std::string dataset;
  std::string out;
  int layers = 1;
  std::optional<int> readout;
  std::vector<std::string> labels;
  int epochs = 50;
  double lr = 0.5;
  int batch = 0;
  std::uint64_t seed = 0;
  bool adversarial = false;
  std::string strategy = "mask-fgsm";
  double strength = 0.05;
  double mask_fraction = 1.0;
  int max_escalations = 10;
  int jobs = 1;
};

int cmd_train(const TrainArgs& a, std::ostream& out) {
  require_jobs(a.jobs);
  LabeledDataset data = io::load_dataset(a.dataset);
  if (data.items.empty()) throw UsageError("dataset is empty");
  std::vector<std::string> labels = a.labels;
  if (labels.empty()) {
    std::set<std::string> seen;
    for (const DatasetItem& item : data.items) seen.insert(item.label);
    labels.assign(seen.begin(), seen.end());
  }
  if (labels.size() != 2) throw UsageError("training needs exactly two labels");
  const int readout = a.readout.value_or(data.n_qubits - 1);
  VariationalModel model =
      VariationalModel::create(data.n_qubits, a.layers, readout, labels, a.seed);
  TrainConfig cfg;
  cfg.epochs = a.epochs;
  cfg.learning_rate = a.lr;
  cfg.batch = a.batch;
  cfg.seed = a.seed;
  cfg.adversarial = a.adversarial;
  cfg.attack.strategy = strategy_from_name(a.strategy);
  cfg.attack.strength = a.strength;
  cfg.attack.mask_fraction = a.mask_fraction;
  cfg.attack.max_escalations = a.max_escalations;
  cfg.attack.seed = a.seed;
  cfg.jobs = a.jobs;
  TrainResult result = train(model, data, cfg);
  const Classifier cls = result.model.classifier();

  io::ModelManifest manifest;
  manifest.povm = result.model.povm();
  Json meta = Json::object();
  meta["layers"] = a.layers;
  meta["readout"] = readout;
  meta["epochs"] = a.epochs;
  meta["learning_rate"] = a.lr;
  meta["batch"] = a.batch;
  meta["seed"] = a.seed;
  meta["adversarial"] = a.adversarial;
  meta["adversarial_examples"] = result.adversarial_examples.size();
  meta["train_accuracy"] = accuracy(cls, data);
  meta["theta"] = reals(result.model.theta);
  meta["loss_curve"] = result.loss_curve;
  manifest.metadata = Json{{"trainer", std::move(meta)}};
  io::save_model(a.out, result.model.circuit(), manifest);
  out << "wrote " << a.out << ", final loss " << format_real(result.loss_curve.back())
      << ", train accuracy " << format_real(accuracy(cls, data)) << "\n";
  return kExitOk;
}

// gen-data -------------------------------------------------------------------

struct GenArgs {
  std::string task;
  int n_qubits = 3;
  int samples = 20;
  std::uint64_t seed = 0;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<double> threshold;
  std::string out;
};

int cmd_gen_data(const GenArgs& a, std::ostream& out) {
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  LabeledDataset data;
  if (a.task == "lcei") {
    data = generate_lcei(a.n_qubits, a.samples, a.alpha_min.value_or(0.0),
                         a.alpha_max.value_or(M_PI / 2), a.seed,
                         a.threshold.value_or(kLceiThreshold));
  } else if (a.task == "synthetic") {
    if (a.alpha_min || a.alpha_max) throw UsageError("alpha range applies to lcei only");
    data = generate_synthetic(a.n_qubits, a.samples, a.seed,
                              a.threshold.value_or(kSyntheticThreshold));
  } else {
    throw UsageError("--task must be lcei or synthetic");
  }
  io::save_dataset(a.out, data);
  out << "wrote " << a.out << " (" << data.size() << " items)\n";
  return kExitOk;
}

// benchmark ------------------------------------------------------------------

struct BenchArgs {
  std::string task;
  int n_qubits = 3;
  int samples = 10;
  std::uint64_t seed = 0;
  std::optional<int> epochs;
  std::optional<int> train_samples;
  int jobs = 1;
  std::string out;
};

int cmd_benchmark(const BenchArgs& a, std::ostream& out) {
  require_jobs(a.jobs);
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  if (a.task != "lcei" && a.task != "synthetic") {
    throw UsageError("--task must be lcei or synthetic");
  }
  BenchmarkConfig cfg = default_benchmark(a.task, a.n_qubits, a.seed);
  cfg.samples = a.samples;
  cfg.jobs = a.jobs;
  if (a.epochs) cfg.train.epochs = *a.epochs;
  if (a.train_samples) cfg.train_samples = *a.train_samples;
  BenchmarkResult result = run_benchmark(cfg);
  fs::create_directories(a.out);
  const fs::path path = fs::path(a.out) / "benchmark.json";
  io::write_file_atomic(path, io::to_text(io::benchmark_to_json(result)));
  out << "wrote " << path.string() << ", critical rlb " << format_real(result.critical_rlb_before)
      << " -> " << format_real(result.critical_rlb_after) << ", ratio "
      << format_real(result.improvement_ratio) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robustness verification for quantum classifiers", "qrover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qrover 0.1.0");
  int code = kExitOk;

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Verify a dataset against a model");
  c_verify->add_option("--model", verify.model, "Model manifest")->required();
  c_verify->add_option("--dataset", verify.dataset, "Dataset file")->required();
  c_verify->add_option("--epsilon", verify.epsilon, "Fidelity-distance budget, 0 < E < 1")
      ->required();
  c_verify->add_option("--method", verify.method, "lb, exact or mixed")
      ->check(CLI::IsMember({"lb", "exact", "mixed"}));
  c_verify->add_option("--out", verify.out, "Report path")->required();
  c_verify->add_option("--jobs", verify.jobs, "Worker threads");
  c_verify->add_flag("--timing", verify.timing, "Include phase timings in the report");
  c_verify->callback([&] { code = cmd_verify(verify, out); });

  StateArgs state;
  auto* c_state = app.add_subcommand("verify-state", "Verify one state");
  c_state->add_option("--model", state.model, "Model manifest")->required();
  c_state->add_option("--state", state.state, "Dataset file holding the state")->required();
  c_state->add_option("--index", state.index, "Item index in the dataset");
  c_state->add_option("--epsilon", state.epsilon, "Fidelity-distance budget, 0 < E < 1")
      ->required();
  c_state->add_option("--out", state.out, "Output path (default stdout)");
  c_state->callback([&] { code = cmd_verify_state(state, out); });

  LowerBoundArgs lb;
  auto* c_lb = app.add_subcommand("lower-bound", "Certified lower bounds for a dataset");
  c_lb->add_option("--model", lb.model, "Model manifest")->required();
  c_lb->add_option("--dataset", lb.dataset, "Dataset file")->required();
  c_lb->add_option("--epsilon", lb.epsilon, "Budget for the under-approximation");
  c_lb->add_option("--out", lb.out, "Output path (default stdout)");
  c_lb->callback([&] { code = cmd_lower_bound(lb, out); });

  AttackArgs attack;
  auto* c_attack = app.add_subcommand("attack", "Gradient attack on feature items");
  c_attack->add_option("--model", attack.model, "Model manifest")->required();
  c_attack->add_option("--dataset", attack.dataset, "Dataset file")->required();
  c_attack->add_option("--strategy", attack.strategy, "fgsm or mask-fgsm")
      ->check(CLI::IsMember({"fgsm", "mask-fgsm"}));
  c_attack->add_option("--strength", attack.strength, "Initial step size");
  c_attack->add_option("--mask-fraction", attack.mask_fraction, "Fraction of features perturbed");
  c_attack->add_option("--max-escalations", attack.max_escalations, "Step doublings");
  c_attack->add_option("--shots", attack.shots, "Finite-shot gradient estimates");
  c_attack->add_option("--seed", attack.seed, "Seed");
  c_attack->add_option("--jobs", attack.jobs, "Worker threads");
  c_attack->add_option("--out", attack.out, "Output path (default stdout)");
  c_attack->callback([&] { code = cmd_attack(attack, out); });

  NoiseArgs noise;
  auto* c_noise = app.add_subcommand("noise", "Add noise to a model");
  c_noise->add_option("--model", noise.model, "Model manifest")->required();
  c_noise->add_option("--kind", noise.kind, "bit_flip, phase_flip, depolarizing or custom")
      ->required();
  c_noise->add_option("--p", noise.p, "Probability (upper limit for random placement)");
  c_noise->add_option("--placement", noise.placement, "end or random")
      ->check(CLI::IsMember({"end", "random"}));
  c_noise->add_option("--seed", noise.seed, "Seed for random placement");
  c_noise->add_option("--kraus", noise.kraus, "JSON list of Kraus matrices for custom noise");
  c_noise->add_option("--out", noise.out, "Output manifest path")->required();
  c_noise->callback([&] { code = cmd_noise(noise, out); });

  TrainArgs tr;
  auto* c_train = app.add_subcommand("train", "Train a variational classifier");
  c_train->add_option("--dataset", tr.dataset, "Training dataset")->required();
  c_train->add_option("--out", tr.out, "Output manifest path")->required();
  c_train->add_option("--layers", tr.layers, "Ansatz layers");
  c_train->add_option("--readout", tr.readout, "Measured qubit (default last)");
  c_train->add_option("--labels", tr.labels, "Labels for outcomes 0 and 1")->delimiter(',');
  c_train->add_option("--epochs", tr.epochs, "Epochs");
  c_train->add_option("--lr", tr.lr, "Learning rate");
  c_train->add_option("--batch", tr.batch, "Batch size, 0 for full batch");
  c_train->add_option("--seed", tr.seed, "Seed");
  c_train->add_flag("--adversarial", tr.adversarial, "Retrain on attack witnesses");
  c_train->add_option("--strategy", tr.strategy, "fgsm or mask-fgsm")
      ->check(CLI::IsMember({"fgsm", "mask-fgsm"}));
  c_train->add_option("--strength", tr.strength, "Attack step size");
  c_train->add_option("--mask-fraction", tr.mask_fraction, "Attack mask fraction");
  c_train->add_option("--max-escalations", tr.max_escalations, "Attack step doublings");
  c_train->add_option("--jobs", tr.jobs, "Worker threads");
  c_train->callback([&] { code = cmd_train(tr, out); });

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen-data", "Generate a task dataset");
  c_gen->add_option("--task", gen.task, "lcei or synthetic")->required();
  c_gen->add_option("--n-qubits", gen.n_qubits, "Qubits");
  c_gen->add_option("--samples", gen.samples, "Items");
  c_gen->add_option("--seed", gen.seed, "Seed");
  c_gen->add_option("--alpha-min", gen.alpha_min, "Smallest rotation angle (lcei)");
  c_gen->add_option("--alpha-max", gen.alpha_max, "Largest rotation angle (lcei)");
  c_gen->add_option("--threshold", gen.threshold, "Label threshold");
  c_gen->add_option("--out", gen.out, "Output dataset path")->required();
  c_gen->callback([&] { code = cmd_gen_data(gen, out); });

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("benchmark", "Run the five-step benchmark procedure");
  c_bench->add_option("--task", bench.task, "lcei or synthetic")->required();
  c_bench->add_option("--n-qubits", bench.n_qubits, "Qubits");
  c_bench->add_option("--samples", bench.samples, "Evaluated samples");
  c_bench->add_option("--seed", bench.seed, "Seed");
  c_bench->add_option("--epochs", bench.epochs, "Clean and retraining epochs");
  c_bench->add_option("--train-samples", bench.train_samples, "Training set size");
  c_bench->add_option("--jobs", bench.jobs, "Worker threads");
  c_bench->add_option("--out", bench.out, "Output directory")->required();
  c_bench->callback([&] { code = cmd_benchmark(bench, out); });

  try {
    check_solver_env();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qrover: usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const UsageError& e) {
    err << "qrover: usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "qrover: error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace qrover
