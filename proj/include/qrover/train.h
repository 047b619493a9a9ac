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

#ifndef QROVER_TRAIN_H_
#define QROVER_TRAIN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrover/attack.h"
#include "qrover/classifier.h"
#include "qrover/verify.h"

namespace qrover {

/// l layers of (ry on every qubit, rz on every qubit, cx chain q -> q+1),
/// slots numbered in gate order.
Circuit variational_ansatz(int n_qubits, int layers);

struct VariationalModel {
  int n_qubits = 1;
  int layers = 1;
  /// Qubit measured in the Z basis; outcome 0 maps to labels[0].
  int readout = 0;
  std::vector<std::string> labels{"0", "1"};
  RVector theta;

  /// Small random angles drawn from `seed`.
  static VariationalModel create(int n_qubits, int layers, int readout,
                                 std::vector<std::string> labels, std::uint64_t seed);

  /// The ansatz with theta bound into its slots.
  Circuit circuit() const;
  Povm povm() const;
  Classifier classifier() const;
};

struct TrainConfig {
  int epochs = 50;
  double learning_rate = 0.5;
  /// 0 means full batch.
  int batch = 0;
  std::uint64_t seed = 0;
  bool adversarial = false;
  AttackConfig attack;
  int jobs = 1;

  void validate() const;
};

struct TrainResult {
  VariationalModel model;
  /// Mean cross-entropy on the training set before each epoch and after the
  /// last one (clean phase, then the adversarial phase if it ran).
  std::vector<double> loss_curve;
  /// Feature witnesses found by the attack, added with their true labels.
  std::vector<DatasetItem> adversarial_examples;
  bool adversarial_phase_ran = false;
};

/// Gradient descent on mean cross-entropy with parameter-shift gradients.
/// With cfg.adversarial, every feature item is attacked after the clean
/// phase and training continues for cfg.epochs on the augmented set. Items
/// without features cannot be attacked and contribute no examples. Throws
/// kDiverged if the loss stops being finite.
TrainResult train(const VariationalModel& model, const LabeledDataset& data,
                  const TrainConfig& cfg);

/// Runs cfg.epochs more epochs on data plus `extra` (labels as given),
/// starting from result.model. A no-op when `extra` is empty.
void continue_training(TrainResult& result, const LabeledDataset& data,
                       std::vector<DatasetItem> extra, const TrainConfig& cfg);

/// Mean cross-entropy of the model on a dataset.
double mean_loss(const VariationalModel& model, const std::vector<DatasetItem>& items);

/// Fraction of items whose predicted label equals their label.
double accuracy(const Classifier& a, const LabeledDataset& data);

inline constexpr double kLceiThreshold = M_PI / 4;

/// Linear cluster state (h on all qubits, cz between neighbours) followed by
/// rx(alpha) on the last qubit, alpha bound to slot 0.
Circuit lcei_template(int n_qubits);

/// Items alternate non-excited / excited; alpha is uniform over the part of
/// [alpha_min, alpha_max] on the matching side of |alpha| = threshold.
LabeledDataset generate_lcei(int n_qubits, int n_samples, double alpha_min, double alpha_max,
                             std::uint64_t seed, double threshold = kLceiThreshold);

inline constexpr double kSyntheticThreshold = 0.0;

/// Angle-encoded features: x_i uniform in [-pi/3, pi/3] for i < n-1; the last
/// feature is threshold +/- m with m in [0.15, pi/2 - 0.15 - |threshold|], and
/// the label is "1" above the threshold. Items alternate labels.
LabeledDataset generate_synthetic(int n_qubits, int n_samples, std::uint64_t seed,
                                  double threshold = kSyntheticThreshold);

/// Model shape used for each generated task.
VariationalModel default_model(const std::string& task, int n_qubits, std::uint64_t seed);

/// Indices of the floor(fraction * |T|) items with the smallest rlb, ties to
/// the smaller index.
std::vector<int> critical_samples(const VerificationReport& report, double fraction = 0.2);
std::vector<int> critical_samples(const std::vector<double>& rlb, double fraction = 0.2);

}  // namespace qrover

#endif  // QROVER_TRAIN_H_
