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

#include "qrover/verify.h"

#include <chrono>
#include <string>

#include "qrover/error.h"
#include "qrover/parallel.h"

namespace qrover {

std::string_view item_kind_name(ItemKind kind) {
  switch (kind) {
    case ItemKind::kDensity: return "density";
    case ItemKind::kPure: return "pure";
    case ItemKind::kFeatures: return "features";
  }
  return "?";
}

DatasetItem DatasetItem::density(DensityMatrix rho, std::string label) {
  DatasetItem item;
  item.kind = ItemKind::kDensity;
  item.state = std::move(rho);
  item.label = std::move(label);
  return item;
}

DatasetItem DatasetItem::pure(const CVector& psi, std::string label) {
  DatasetItem item;
  item.kind = ItemKind::kPure;
  item.state = PureState(psi).to_density();
  item.amplitudes = psi;
  item.label = std::move(label);
  return item;
}

DatasetItem DatasetItem::features(EncodedInput input, std::string label) {
  DatasetItem item;
  item.kind = ItemKind::kFeatures;
  item.state = input.state;
  item.input = std::move(input);
  item.label = std::move(label);
  return item;
}

EncodedInput LabeledDataset::encode(const RVector& x) const {
  if (!encoding) throw Error(ErrorCode::kInvalidArgument, "dataset has no feature encoding");
  switch (*encoding) {
    case Encoding::kAngle: return encode_angle(x, n_qubits);
    case Encoding::kAmplitude: return encode_amplitude(x);
    case Encoding::kCircuit:
      if (!encoding_template) {
        throw Error(ErrorCode::kInvalidArgument, "circuit encoding without a template");
      }
      return encode_circuit(x, *encoding_template);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad encoding");
}

void check_epsilon(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie in [0, 1), got " + format_real(eps));
  }
}

StateVerdict verify_state(const Classifier& a, double eps, const DensityMatrix& rho,
                          const SdpSettings& settings) {
  check_epsilon(eps);
  OptimalRadius r = optimal_radius(a, rho, settings);
  StateVerdict out;
  out.eps_star = r.eps_star;
  out.sdp_solves = r.sdp_solves;
  out.robust = r.eps_star.exceeds(eps);
  if (!out.robust) {
    out.witness = r.witness;
    out.target_label = r.target_label;
    std::vector<double> dist = outcome_distribution(a, *r.witness);
    out.boundary = dist[r.predicted_label] >= dist[*r.target_label] - kTieTolerance;
  }
  return out;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kLowerBound: return "lb";
    case Method::kExact: return "exact";
    case Method::kMixed: return "mixed";
  }
  return "?";
}

Method method_from_name(std::string_view name) {
  if (name == "lb") return Method::kLowerBound;
  if (name == "exact") return Method::kExact;
  if (name == "mixed") return Method::kMixed;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kRobust: return "robust";
    case Verdict::kNonRobust: return "non_robust";
    case Verdict::kUnknown: return "unknown";
    case Verdict::kSkippedMisclassified: return "skipped_misclassified";
  }
  return "?";
}

Verdict verdict_from_name(std::string_view name) {
  for (Verdict v : {Verdict::kRobust, Verdict::kNonRobust, Verdict::kUnknown,
                    Verdict::kSkippedMisclassified}) {
    if (verdict_name(v) == name) return v;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown verdict '" + std::string(name) + "'");
}

int VerificationReport::correctly_classified() const {
  return static_cast<int>(items.size() - misclassified.size());
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

VerificationReport verify_dataset(const Classifier& a, double eps,
                                  const LabeledDataset& data, Method method,
                                  const VerifyOptions& options) {
  check_epsilon(eps);
  VerificationReport report;
  report.epsilon = eps;
  report.method = method;
  report.labels = a.povm.labels;
  const int n = data.size();
  report.items.resize(n);

  auto start = std::chrono::steady_clock::now();
  parallel_for(n, options.jobs, [&](int i) {
    const DatasetItem& item = data.items[i];
    ItemReport& r = report.items[i];
    r.index = i;
    r.label = a.povm.index_of(item.label);
    std::vector<double> dist = outcome_distribution(a, item.state);
    r.predicted = argmax_label(dist);
    r.rlb = robustness_lower_bound(dist);
    if (r.predicted != r.label) {
      r.verdict = Verdict::kSkippedMisclassified;
    } else if (!(eps > r.rlb)) {
      r.verdict = Verdict::kRobust;
    } else {
      r.verdict = Verdict::kUnknown;
    }
  });
  report.timing.lower_bound_seconds = seconds_since(start);

  std::vector<int> candidates;
  int screened_out = 0;
  for (const ItemReport& r : report.items) {
    if (r.verdict == Verdict::kSkippedMisclassified) {
      report.misclassified.push_back(r.index);
      continue;
    }
    if (r.verdict == Verdict::kUnknown) ++screened_out;
    if (method == Method::kExact || (method == Method::kMixed && r.verdict == Verdict::kUnknown)) {
      candidates.push_back(r.index);
    }
  }
  const int total = report.correctly_classified();
  if (total > 0) {
    report.under_robust_accuracy = 1.0 - static_cast<double>(screened_out) / total;
  }
  if (method == Method::kLowerBound) return report;

  std::vector<StateVerdict> verdicts(candidates.size());
  start = std::chrono::steady_clock::now();
  parallel_for(static_cast<int>(candidates.size()), options.jobs, [&](int k) {
    verdicts[k] = verify_state(a, eps, data.items[candidates[k]].state, options.sdp);
  });
  report.timing.sdp_seconds = seconds_since(start);
  report.sdp_calls = static_cast<int>(candidates.size());

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    ItemReport& r = report.items[candidates[k]];
    StateVerdict& v = verdicts[k];
    r.optimal = v.eps_star;
    if (v.robust) {
      r.verdict = Verdict::kRobust;
      continue;
    }
    r.verdict = Verdict::kNonRobust;
    r.boundary = v.boundary;
    r.witness_ref = static_cast<int>(report.adversarial_set.size());
    report.adversarial_set.push_back({std::move(*v.witness), r.index, v.target_label});
  }
  // Mixed mode leaves screened items robust by the certified bound.
  if (total > 0) {
    report.robust_accuracy =
        1.0 - static_cast<double>(report.adversarial_set.size()) / total;
  }
  return report;
}

double under_robust_accuracy(const Classifier& a, double eps, const LabeledDataset& data) {
  VerificationReport r = verify_dataset(a, eps, data, Method::kLowerBound);
  if (!r.under_robust_accuracy) {
    throw Error(ErrorCode::kInvalidArgument, "no correctly classified items");
  }
  return *r.under_robust_accuracy;
}

}  // namespace qrover
