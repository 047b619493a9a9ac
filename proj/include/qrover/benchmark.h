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

#ifndef QROVER_BENCHMARK_H_
#define QROVER_BENCHMARK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrover/attack.h"
#include "qrover/bounds.h"
#include "qrover/train.h"

namespace qrover {

struct BenchmarkConfig {
  std::string task = "lcei";
  int n_qubits = 3;
  /// Evaluated samples, half from each class.
  int samples = 10;
  int train_samples = 40;
  std::uint64_t seed = 0;
  TrainConfig train;
  AttackConfig attack;
  double critical_fraction = 0.2;
  int jobs = 1;

  void validate() const;
};

/// Bounds for one evaluated sample under one model.
struct SampleBounds {
  int predicted = 0;
  double rlb = 0.0;
  Radius eps_star = Radius::infinite();
  std::optional<double> rub;

  std::optional<double> gap() const;
};

struct BenchmarkRow {
  int index = 0;
  std::string label;
  RVector features;
  std::vector<double> distribution;
  SampleBounds before;
  SampleBounds after;
  bool critical = false;
};

struct BenchmarkResult {
  std::string task;
  int n_qubits = 0;
  std::uint64_t seed = 0;
  double train_accuracy_before = 0.0;
  double train_accuracy_after = 0.0;
  int adversarial_examples = 0;
  std::vector<BenchmarkRow> rows;
  std::vector<int> critical;
  double critical_rlb_before = 0.0;
  double critical_rlb_after = 0.0;
  /// critical_rlb_after / critical_rlb_before.
  double improvement_ratio = 0.0;
};

/// Clean training, per-sample distributions, certified lower bounds, exact
/// radii, Mask-FGSM upper bounds, retraining on the samples' adversarial
/// examples, and the before/after comparison over the critical samples.
BenchmarkResult run_benchmark(const BenchmarkConfig& cfg);

/// Task defaults: epochs, learning rate and attack settings known to train.
BenchmarkConfig default_benchmark(const std::string& task, int n_qubits, std::uint64_t seed);

}  // namespace qrover

#endif  // QROVER_BENCHMARK_H_
