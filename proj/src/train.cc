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

#include "qrover/train.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrover/channel.h"
#include "qrover/error.h"
#include "qrover/parallel.h"
#include "qrover/rng.h"

namespace qrover {

Circuit variational_ansatz(int n_qubits, int layers) {
  if (n_qubits < 1 || layers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ansatz needs at least one qubit and layer");
  }
  Circuit c;
  c.n_qubits = n_qubits;
  int slot = 0;
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n_qubits; ++q) c.add(GateKind::kRy, {q}, {0.0}, slot++);
    for (int q = 0; q < n_qubits; ++q) c.add(GateKind::kRz, {q}, {0.0}, slot++);
    for (int q = 0; q + 1 < n_qubits; ++q) c.add(GateKind::kCx, {q, q + 1});
  }
  return c;
}

VariationalModel VariationalModel::create(int n_qubits, int layers, int readout,
                                          std::vector<std::string> labels,
                                          std::uint64_t seed) {
  if (readout < 0 || readout >= n_qubits) {
    throw Error(ErrorCode::kInvalidArgument, "readout qubit out of range");
  }
  if (labels.size() != 2) throw Error(ErrorCode::kInvalidArgument, "model needs two labels");
  VariationalModel m;
  m.n_qubits = n_qubits;
  m.layers = layers;
  m.readout = readout;
  m.labels = std::move(labels);
  SplitMix64 rng(seed);
  m.theta = RVector(variational_ansatz(n_qubits, layers).slot_count());
  for (Eigen::Index i = 0; i < m.theta.size(); ++i) m.theta(i) = 0.1 * rng.normal();
  return m;
}

Circuit VariationalModel::circuit() const {
  return bind_slots(variational_ansatz(n_qubits, layers), theta);
}

Povm VariationalModel::povm() const { return Povm::z_basis(n_qubits, readout, labels); }

Classifier VariationalModel::classifier() const {
  return Classifier::from_circuit(circuit(), povm());
}

void TrainConfig::validate() const {
  if (epochs < 0) throw Error(ErrorCode::kInvalidArgument, "epochs must be >= 0");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "learning rate must be finite and positive");
  }
  if (batch < 0) throw Error(ErrorCode::kInvalidArgument, "batch must be >= 0");
}

namespace {

struct Example {
  const DensityMatrix* state;
  int label;
};

double label_probability(const Circuit& circuit, const Povm& povm, const Example& ex) {
  CMatrix out = simulate(circuit, ex.state->matrix());
  return std::clamp((povm.elements[ex.label] * out).trace().real(), 0.0, 1.0);
}

double loss_of(double p) { return -std::log(std::max(p, 1e-300)); }

std::vector<Example> resolve(const VariationalModel& model,
                             const std::vector<DatasetItem>& items) {
  if (items.empty()) throw Error(ErrorCode::kInvalidArgument, "training data is empty");
  Povm povm = model.povm();
  std::vector<Example> out;
  out.reserve(items.size());
  for (const DatasetItem& item : items) {
    if (item.state.dim() != (1 << model.n_qubits)) {
      throw Error(ErrorCode::kDimMismatch, "item does not match the model's qubit count");
    }
    out.push_back({&item.state, povm.index_of(item.label)});
  }
  return out;
}

double mean_loss_examples(const VariationalModel& model, const std::vector<Example>& ex,
                          int jobs) {
  const Circuit circuit = model.circuit();
  const Povm povm = model.povm();
  std::vector<double> losses(ex.size());
  parallel_for(static_cast<int>(ex.size()), jobs, [&](int i) {
    losses[i] = loss_of(label_probability(circuit, povm, ex[i]));
  });
  return std::accumulate(losses.begin(), losses.end(), 0.0) / ex.size();
}

// Mean-loss gradient over a batch by parameter shift on every theta slot.
RVector batch_gradient(const VariationalModel& model, const std::vector<Example>& ex,
                       const std::vector<int>& batch, int jobs) {
  const Circuit base = model.circuit();
  const Povm povm = model.povm();
  const int n_params = static_cast<int>(model.theta.size());
  std::vector<int> op_of_slot(n_params);
  for (std::size_t i = 0; i < base.ops.size(); ++i) {
    if (base.ops[i].slot) op_of_slot[*base.ops[i].slot] = static_cast<int>(i);
  }
  std::vector<RVector> per_item(batch.size());
  parallel_for(static_cast<int>(batch.size()), jobs, [&](int b) {
    const Example& e = ex[batch[b]];
    const double p = std::max(label_probability(base, povm, e), 1e-300);
    RVector g(n_params);
    Circuit shifted = base;
    for (int j = 0; j < n_params; ++j) {
      double& angle = shifted.ops[op_of_slot[j]].params[0];
      const double original = angle;
      angle = original + M_PI / 2;
      const double plus = label_probability(shifted, povm, e);
      angle = original - M_PI / 2;
      const double minus = label_probability(shifted, povm, e);
      angle = original;
      g(j) = -0.5 * (plus - minus) / p;
    }
    per_item[b] = g;
  });
  RVector total = RVector::Zero(n_params);
  for (const RVector& g : per_item) total += g;
  return total / static_cast<double>(batch.size());
}

void run_epochs(VariationalModel& model, const std::vector<Example>& ex, const TrainConfig& cfg,
                std::uint64_t stream, std::vector<double>& curve) {
  const int n = static_cast<int>(ex.size());
  const int batch = cfg.batch == 0 ? n : std::min(cfg.batch, n);
  SplitMix64 rng(cfg.seed ^ stream);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const double loss = mean_loss_examples(model, ex, cfg.jobs);
    if (!std::isfinite(loss)) {
      throw Error(ErrorCode::kDiverged, "loss is not finite at epoch " + std::to_string(epoch));
    }
    curve.push_back(loss);
    if (batch < n) {
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      }
    }
    for (int start = 0; start < n; start += batch) {
      std::vector<int> chunk(order.begin() + start, order.begin() + std::min(n, start + batch));
      RVector g = batch_gradient(model, ex, chunk, cfg.jobs);
      model.theta -= cfg.learning_rate * g;
      if (!model.theta.allFinite()) {
        throw Error(ErrorCode::kDiverged, "parameters are not finite at epoch " +
                                              std::to_string(epoch));
      }
    }
  }
  const double final_loss = mean_loss_examples(model, ex, cfg.jobs);
  if (!std::isfinite(final_loss)) throw Error(ErrorCode::kDiverged, "final loss is not finite");
  curve.push_back(final_loss);
}

}  // namespace

double mean_loss(const VariationalModel& model, const std::vector<DatasetItem>& items) {
  return mean_loss_examples(model, resolve(model, items), 1);
}

double accuracy(const Classifier& a, const LabeledDataset& data) {
  if (data.items.empty()) return 0.0;
  int correct = 0;
  for (const DatasetItem& item : data.items) {
    if (classify(a, item.state) == a.povm.index_of(item.label)) ++correct;
  }
  return static_cast<double>(correct) / data.size();
}

void continue_training(TrainResult& out, const LabeledDataset& data,
                       std::vector<DatasetItem> extra, const TrainConfig& cfg) {
  cfg.validate();
  if (extra.empty()) return;
  std::vector<DatasetItem> augmented = data.items;
  augmented.insert(augmented.end(), extra.begin(), extra.end());
  out.adversarial_examples = std::move(extra);
  out.adversarial_phase_ran = true;
  run_epochs(out.model, resolve(out.model, augmented), cfg, 0x5ad0u, out.loss_curve);
}

TrainResult train(const VariationalModel& model, const LabeledDataset& data,
                  const TrainConfig& cfg) {
  cfg.validate();
  TrainResult out;
  out.model = model;
  run_epochs(out.model, resolve(model, data.items), cfg, 0, out.loss_curve);
  if (!cfg.adversarial) return out;
  Classifier a = out.model.classifier();
  std::vector<std::optional<DatasetItem>> found(data.items.size());
  parallel_for(data.size(), cfg.jobs, [&](int i) {
    const DatasetItem& item = data.items[i];
    if (!item.input) return;
    if (classify(a, item.state) != a.povm.index_of(item.label)) return;
    AttackConfig attack = cfg.attack;
    attack.seed = cfg.attack.seed ^ static_cast<std::uint64_t>(i);
    AttackResult r = run_attack(a, *item.input, attack);
    if (r.success) found[i] = DatasetItem::features(std::move(*r.adversarial), item.label);
  });
  std::vector<DatasetItem> extra;
  for (auto& f : found) {
    if (f) extra.push_back(std::move(*f));
  }
  continue_training(out, data, std::move(extra), cfg);
  return out;
}

Circuit lcei_template(int n_qubits) {
  Circuit c;
  c.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q) c.add(GateKind::kH, {q});
  for (int q = 0; q + 1 < n_qubits; ++q) c.add(GateKind::kCz, {q, q + 1});
  c.add(GateKind::kRx, {n_qubits - 1}, {0.0}, 0);
  return c;
}

namespace {

struct Band {
  double lo;
  double hi;
  double length() const { return std::max(0.0, hi - lo); }
};

double sample_bands(const std::vector<Band>& bands, SplitMix64& rng) {
  double total = 0.0;
  for (const Band& b : bands) total += b.length();
  double u = rng.uniform() * total;
  for (const Band& b : bands) {
    if (u < b.length()) return b.lo + u;
    u -= b.length();
  }
  return bands.back().hi;
}

}  // namespace

LabeledDataset generate_lcei(int n_qubits, int n_samples, double alpha_min, double alpha_max,
                             std::uint64_t seed, double threshold) {
  if (n_qubits < 2 || n_qubits > 6) {
    throw Error(ErrorCode::kInvalidArgument, "lcei supports 2 to 6 qubits");
  }
  if (n_samples < 0) throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 0");
  if (!(alpha_min < alpha_max) || !(threshold > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "empty alpha range");
  }
  std::vector<Band> calm{{std::max(alpha_min, -threshold), std::min(alpha_max, threshold)}};
  std::vector<Band> excited;
  if (alpha_min < -threshold) excited.push_back({alpha_min, -threshold});
  if (alpha_max > threshold) excited.push_back({threshold, alpha_max});
  auto empty = [](const std::vector<Band>& v) {
    double t = 0.0;
    for (const Band& b : v) t += b.length();
    return !(t > 0.0);
  };
  if (empty(calm) || empty(excited)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha range must straddle the threshold");
  }
  LabeledDataset data;
  data.name = "lcei-" + std::to_string(n_qubits);
  data.n_qubits = n_qubits;
  data.encoding = Encoding::kCircuit;
  data.encoding_template = lcei_template(n_qubits);
  SplitMix64 rng(seed);
  for (int i = 0; i < n_samples; ++i) {
    const bool is_excited = i % 2 == 1;
    RVector x(1);
    x(0) = sample_bands(is_excited ? excited : calm, rng);
    data.items.push_back(DatasetItem::features(encode_circuit(x, *data.encoding_template),
                                               is_excited ? "excited" : "non-excited"));
  }
  return data;
}

LabeledDataset generate_synthetic(int n_qubits, int n_samples, std::uint64_t seed,
                                  double threshold) {
  if (n_qubits < 1 || n_qubits > 6) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic task supports 1 to 6 qubits");
  }
  if (n_samples < 0) throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 0");
  if (!(std::abs(threshold) <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic threshold must lie in [-1, 1]");
  }
  LabeledDataset data;
  data.name = "synthetic-" + std::to_string(n_qubits);
  data.n_qubits = n_qubits;
  data.encoding = Encoding::kAngle;
  SplitMix64 rng(seed);
  for (int i = 0; i < n_samples; ++i) {
    const bool positive = i % 2 == 1;
    RVector x(n_qubits);
    for (int q = 0; q + 1 < n_qubits; ++q) x(q) = (2.0 * rng.uniform() - 1.0) * M_PI / 3;
    const double magnitude = 0.15 + rng.uniform() * (M_PI / 2 - 0.15 - std::abs(threshold));
    x(n_qubits - 1) = threshold + (positive ? magnitude : -magnitude);
    data.items.push_back(DatasetItem::features(encode_angle(x, n_qubits), positive ? "1" : "0"));
  }
  return data;
}

VariationalModel default_model(const std::string& task, int n_qubits, std::uint64_t seed) {
  if (task == "lcei") {
    return VariationalModel::create(n_qubits, 2, n_qubits - 1,
                                    {"non-excited", "excited"}, seed);
  }
  if (task == "synthetic") {
    return VariationalModel::create(n_qubits, 1, n_qubits - 1, {"0", "1"}, seed);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown task '" + task + "'");
}

std::vector<int> critical_samples(const std::vector<double>& rlb, double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "fraction must lie in [0, 1]");
  }
  const int n = static_cast<int>(rlb.size());
  const int k = static_cast<int>(std::floor(fraction * n + 1e-9));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return rlb[i] < rlb[j]; });
  order.resize(k);
  return order;
}

std::vector<int> critical_samples(const VerificationReport& report, double fraction) {
  std::vector<double> rlb;
  rlb.reserve(report.items.size());
  for (const ItemReport& r : report.items) rlb.push_back(r.rlb);
  return critical_samples(rlb, fraction);
}

}  // namespace qrover
