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

#ifndef QROVER_VERIFY_H_
#define QROVER_VERIFY_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrover/attack.h"
#include "qrover/bounds.h"
#include "qrover/classifier.h"
#include "qrover/linalg.h"

namespace qrover {

enum class ItemKind { kDensity, kPure, kFeatures };

std::string_view item_kind_name(ItemKind kind);

struct DatasetItem {
  ItemKind kind = ItemKind::kDensity;
  DensityMatrix state = DensityMatrix::basis(2, 0);
  std::string label;
  /// Amplitudes for kPure items.
  std::optional<CVector> amplitudes;
  /// Encoded features for kFeatures items.
  std::optional<EncodedInput> input;

  static DatasetItem density(DensityMatrix rho, std::string label);
  static DatasetItem pure(const CVector& psi, std::string label);
  static DatasetItem features(EncodedInput input, std::string label);
};

struct LabeledDataset {
  std::string name;
  int n_qubits = 0;
  /// Shared by every feature item.
  std::optional<Encoding> encoding;
  std::optional<Circuit> encoding_template;
  std::vector<DatasetItem> items;

  int size() const { return static_cast<int>(items.size()); }
  /// Encodes x the way this dataset's feature items are encoded.
  EncodedInput encode(const RVector& x) const;
};

inline constexpr double kTieTolerance = 1e-6;

struct StateVerdict {
  bool robust = false;
  Radius eps_star = Radius::infinite();
  std::optional<DensityMatrix> witness;
  std::optional<int> target_label;
  /// The target label does not beat the predicted label at the witness by
  /// more than kTieTolerance.
  bool boundary = false;
  int sdp_solves = 0;
};

/// Robust iff eps* > eps; on failure the minimizing state is the witness.
StateVerdict verify_state(const Classifier& a, double eps, const DensityMatrix& rho,
                          const SdpSettings& settings = {});

enum class Method { kLowerBound, kExact, kMixed };

std::string_view method_name(Method method);
Method method_from_name(std::string_view name);

enum class Verdict { kRobust, kNonRobust, kUnknown, kSkippedMisclassified };

std::string_view verdict_name(Verdict verdict);
Verdict verdict_from_name(std::string_view name);

struct ItemReport {
  int index = 0;
  int label = 0;
  int predicted = 0;
  double rlb = 0.0;
  std::optional<Radius> optimal;
  std::optional<double> rub;
  Verdict verdict = Verdict::kUnknown;
  bool boundary = false;
  /// Position of this item's witness in the adversarial set.
  std::optional<int> witness_ref;

  bool operator==(const ItemReport&) const = default;
};

struct AdversarialExample {
  DensityMatrix witness = DensityMatrix::basis(2, 0);
  int item_index = 0;
  std::optional<int> target_label;
};

struct PhaseTiming {
  double lower_bound_seconds = 0.0;
  double sdp_seconds = 0.0;
};

struct VerificationReport {
  double epsilon = 0.0;
  /// The classifier's label names, indexed like ItemReport::label.
  std::vector<std::string> labels;
  Method method = Method::kMixed;
  std::vector<ItemReport> items;
  std::optional<double> robust_accuracy;
  std::optional<double> under_robust_accuracy;
  std::vector<AdversarialExample> adversarial_set;
  std::vector<int> misclassified;
  /// Items that entered the exact verifier.
  int sdp_calls = 0;
  PhaseTiming timing;

  int correctly_classified() const;
};

struct VerifyOptions {
  int jobs = 1;
  SdpSettings sdp;
};

/// Dataset robust accuracy. kExact sends every correctly classified item to
/// verify_state; kMixed only those with eps > rlb; kLowerBound computes the
/// under-approximation alone. Misclassified items are listed separately and
/// excluded from both accuracies.
VerificationReport verify_dataset(const Classifier& a, double eps,
                                  const LabeledDataset& data, Method method,
                                  const VerifyOptions& options = {});

/// 1 - r / |T'| over the correctly classified items T', where r counts those
/// with eps > rlb. No SDP calls.
double under_robust_accuracy(const Classifier& a, double eps, const LabeledDataset& data);

/// Throws kInvalidArgument unless 0 <= eps < 1.
void check_epsilon(double eps);

}  // namespace qrover

#endif  // QROVER_VERIFY_H_
