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

#ifndef QROVER_ATTACK_H_
#define QROVER_ATTACK_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qrover/classifier.h"
#include "qrover/linalg.h"
#include "qrover/qasm.h"
#include "qrover/rng.h"

namespace qrover {

/// How classical features become a state. kCircuit binds feature k to the
/// rotation annotated with slot k in a template circuit.
enum class Encoding { kAngle, kAmplitude, kCircuit };

std::string_view encoding_name(Encoding encoding);
Encoding encoding_from_name(std::string_view name);

struct EncodedInput {
  RVector features;
  Encoding encoding = Encoding::kAngle;
  /// Preparation circuit from |0...0>, absent for amplitude encoding.
  std::optional<Circuit> circuit;
  DensityMatrix state = DensityMatrix::basis(2, 0);
};

/// Angle encoding: feature i drives ry(x_i) on qubit i mod n. Features past
/// the first n start a new layer, separated by a cz chain.
Circuit angle_encoding_circuit(const RVector& x, int n_qubits);

/// Writes x_k into params[0] of the op carrying slot k.
Circuit bind_slots(const Circuit& tmpl, const RVector& x);

EncodedInput encode_angle(const RVector& x, int n_qubits);
EncodedInput encode_amplitude(const RVector& x);
EncodedInput encode_circuit(const RVector& x, const Circuit& tmpl);
/// Re-encodes new features with the same scheme (and template) as `like`.
EncodedInput reencode(const EncodedInput& like, const RVector& x);

/// Scalar loss on the outcome distribution.
struct LossSpec {
  enum class Kind {
    kCrossEntropy,  // -log p_label
    kLinear,        // sum_c weights_c p_c
  };
  Kind kind = Kind::kCrossEntropy;
  int label = 0;
  std::vector<double> weights;

  static LossSpec cross_entropy(int label) { return {Kind::kCrossEntropy, label, {}}; }
  static LossSpec linear(std::vector<double> weights) {
    return {Kind::kLinear, 0, std::move(weights)};
  }
  double value(const std::vector<double>& p) const;
  /// dL/dp_c.
  std::vector<double> derivative(const std::vector<double>& p) const;
};

/// Finite-shot estimation settings. Absent means exact probabilities.
struct ShotModel {
  int shots = 1024;
  std::uint64_t seed = 0;
};

struct GradientResult {
  RVector gradient;
  double loss = 0.0;
  int evaluations = 0;
};

/// dL/dx by the two-term parameter-shift rule on every encoding rotation.
/// Throws kNonShiftableGate when an encoding parameter does not sit on an
/// rx/ry/rz gate (or the input is amplitude encoded).
GradientResult parameter_shift_gradient(const Classifier& a,
                                        const EncodedInput& input,
                                        const LossSpec& loss,
                                        const std::optional<ShotModel>& shots = {});

/// Outcome distribution estimated from `shots` samples.
std::vector<double> sample_distribution(const std::vector<double>& p, int shots,
                                        SplitMix64& rng);

/// x + eps sgn(grad), sgn(0) = 0.
RVector fgsm_step(const RVector& x, const RVector& grad, double eps);

/// Like fgsm_step but only on the ceil(fraction * dim) entries of largest
/// |grad| (ties to the smaller index).
RVector mask_fgsm_step(const RVector& x, const RVector& grad, double eps,
                       double mask_fraction);

enum class AttackStrategy { kFgsm, kMaskFgsm };

std::string_view strategy_name(AttackStrategy strategy);
AttackStrategy strategy_from_name(std::string_view name);

struct AttackConfig {
  AttackStrategy strategy = AttackStrategy::kMaskFgsm;
  double strength = 0.05;
  double mask_fraction = 1.0;
  int max_escalations = 10;
  std::optional<int> shots;
  std::uint64_t seed = 0;

  /// Throws kInvalidArgument.
  void validate(int n_features) const;
};

struct AttackResult {
  bool success = false;
  std::optional<EncodedInput> adversarial;
  std::optional<double> rub;
  int escalations_used = 0;
  double final_strength = 0.0;
  int original_label = 0;
  std::optional<int> adversarial_label;
  int evaluations = 0;
};

/// One gradient, then steps of strength eps, 2 eps, 4 eps, ... until the
/// label changes or max_escalations doublings are spent.
AttackResult run_attack(const Classifier& a, const EncodedInput& input,
                        const AttackConfig& cfg);

}  // namespace qrover

#endif  // QROVER_ATTACK_H_
