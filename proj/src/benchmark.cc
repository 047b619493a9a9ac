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

#include "qrover/benchmark.h"

#include <string>

#include "qrover/error.h"
#include "qrover/parallel.h"

namespace qrover {

void BenchmarkConfig::validate() const {
  if (task != "lcei" && task != "synthetic") {
    throw Error(ErrorCode::kInvalidArgument, "unknown task '" + task + "'");
  }
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  if (train_samples < 1) throw Error(ErrorCode::kInvalidArgument, "train samples must be >= 1");
  train.validate();
}

std::optional<double> SampleBounds::gap() const {
  if (!rub) return std::nullopt;
  return *rub - rlb;
}

namespace {

LabeledDataset make_task(const std::string& task, int n_qubits, int samples,
                         std::uint64_t seed) {
  if (task == "lcei") return generate_lcei(n_qubits, samples, 0.0, M_PI / 2, seed);
  return generate_synthetic(n_qubits, samples, seed);
}

struct Evaluation {
  SampleBounds bounds;
  std::optional<DatasetItem> adversarial;
};

Evaluation evaluate(const Classifier& a, const DatasetItem& item, const AttackConfig& attack) {
  Evaluation out;
  std::vector<double> dist = outcome_distribution(a, item.state);
  out.bounds.predicted = argmax_label(dist);
  out.bounds.rlb = robustness_lower_bound(dist);
  out.bounds.eps_star = optimal_radius(a, item.state).eps_star;
  AttackResult r = run_attack(a, *item.input, attack);
  if (r.success) {
    out.bounds.rub = r.rub;
    out.adversarial = DatasetItem::features(std::move(*r.adversarial), item.label);
  }
  return out;
}

double mean_over(const std::vector<BenchmarkRow>& rows, const std::vector<int>& idx,
                 bool after) {
  if (idx.empty()) return 0.0;
  double total = 0.0;
  for (int i : idx) total += after ? rows[i].after.rlb : rows[i].before.rlb;
  return total / idx.size();
}

}  // namespace

BenchmarkResult run_benchmark(const BenchmarkConfig& cfg) {
  cfg.validate();
  LabeledDataset train_set = make_task(cfg.task, cfg.n_qubits, cfg.train_samples, cfg.seed);
  LabeledDataset samples =
      make_task(cfg.task, cfg.n_qubits, cfg.samples, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  TrainConfig train_cfg = cfg.train;
  train_cfg.adversarial = false;
  train_cfg.jobs = cfg.jobs;

  BenchmarkResult out;
  out.task = cfg.task;
  out.n_qubits = cfg.n_qubits;
  out.seed = cfg.seed;
  TrainResult trained =
      train(default_model(cfg.task, cfg.n_qubits, cfg.seed), train_set, train_cfg);
  const Classifier before = trained.model.classifier();
  out.train_accuracy_before = accuracy(before, train_set);

  const int n = samples.size();
  out.rows.resize(n);
  std::vector<std::optional<DatasetItem>> adversarial(n);
  parallel_for(n, cfg.jobs, [&](int i) {
    const DatasetItem& item = samples.items[i];
    BenchmarkRow& row = out.rows[i];
    row.index = i;
    row.label = item.label;
    row.features = item.input->features;
    row.distribution = outcome_distribution(before, item.state);
    AttackConfig attack = cfg.attack;
    attack.seed = cfg.attack.seed ^ static_cast<std::uint64_t>(i);
    Evaluation e = evaluate(before, item, attack);
    row.before = e.bounds;
    adversarial[i] = std::move(e.adversarial);
  });

  std::vector<DatasetItem> extra;
  for (auto& a : adversarial) {
    if (a) extra.push_back(std::move(*a));
  }
  out.adversarial_examples = static_cast<int>(extra.size());
  continue_training(trained, train_set, std::move(extra), train_cfg);
  const Classifier after = trained.model.classifier();
  out.train_accuracy_after = accuracy(after, train_set);

  parallel_for(n, cfg.jobs, [&](int i) {
    AttackConfig attack = cfg.attack;
    attack.seed = cfg.attack.seed ^ static_cast<std::uint64_t>(i);
    out.rows[i].after = evaluate(after, samples.items[i], attack).bounds;
  });

  std::vector<double> rlb;
  for (const BenchmarkRow& row : out.rows) rlb.push_back(row.before.rlb);
  out.critical = critical_samples(rlb, cfg.critical_fraction);
  for (int i : out.critical) out.rows[i].critical = true;
  out.critical_rlb_before = mean_over(out.rows, out.critical, false);
  out.critical_rlb_after = mean_over(out.rows, out.critical, true);
  out.improvement_ratio =
      out.critical_rlb_before > 0.0 ? out.critical_rlb_after / out.critical_rlb_before : 0.0;
  return out;
}

BenchmarkConfig default_benchmark(const std::string& task, int n_qubits, std::uint64_t seed) {
  BenchmarkConfig cfg;
  cfg.task = task;
  cfg.n_qubits = n_qubits;
  cfg.seed = seed;
  cfg.train.epochs = 20;
  cfg.train.learning_rate = 0.5;
  cfg.train.seed = seed;
  cfg.attack.strategy = AttackStrategy::kMaskFgsm;
  cfg.attack.strength = 0.05;
  // Synthetic tasks perturb only the top-gradient feature.
  cfg.attack.mask_fraction = task == "lcei" ? 1.0 : 1.0 / n_qubits;
  cfg.attack.max_escalations = 10;
  cfg.attack.seed = seed;
  return cfg;
}

}  // namespace qrover
