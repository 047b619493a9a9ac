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

#include "qrover/attack.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrover/channel.h"
#include "qrover/error.h"

namespace qrover {

std::string_view encoding_name(Encoding encoding) {
  switch (encoding) {
    case Encoding::kAngle: return "angle";
    case Encoding::kAmplitude: return "amplitude";
    case Encoding::kCircuit: return "circuit";
  }
  return "?";
}

Encoding encoding_from_name(std::string_view name) {
  if (name == "angle") return Encoding::kAngle;
  if (name == "amplitude") return Encoding::kAmplitude;
  if (name == "circuit") return Encoding::kCircuit;
  throw Error(ErrorCode::kInvalidArgument, "unknown encoding '" + std::string(name) + "'");
}

Circuit angle_encoding_circuit(const RVector& x, int n_qubits) {
  if (n_qubits < 1) throw Error(ErrorCode::kInvalidArgument, "encoding needs a qubit");
  Circuit c;
  c.n_qubits = n_qubits;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const int q = static_cast<int>(i % n_qubits);
    if (i > 0 && q == 0) {
      for (int j = 0; j + 1 < n_qubits; ++j) c.add(GateKind::kCz, {j, j + 1});
    }
    c.add(GateKind::kRy, {q}, {x(i)}, static_cast<int>(i));
  }
  return c;
}

Circuit bind_slots(const Circuit& tmpl, const RVector& x) {
  if (tmpl.slot_count() != x.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "template has " + std::to_string(tmpl.slot_count()) + " slots, got " +
                    std::to_string(x.size()) + " features");
  }
  Circuit out = tmpl;
  for (GateOp& op : out.ops) {
    if (op.slot) op.params[0] = x(*op.slot);
  }
  return out;
}

namespace {

DensityMatrix prepare(const Circuit& circuit) {
  const int dim = 1 << circuit.n_qubits;
  return DensityMatrix::project(simulate(circuit, DensityMatrix::basis(dim, 0).matrix()));
}

}  // namespace

EncodedInput encode_angle(const RVector& x, int n_qubits) {
  EncodedInput in;
  in.features = x;
  in.encoding = Encoding::kAngle;
  in.circuit = angle_encoding_circuit(x, n_qubits);
  in.state = prepare(*in.circuit);
  return in;
}

EncodedInput encode_amplitude(const RVector& x) {
  const double norm = x.norm();
  if (!(norm > 0.0) || !x.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "amplitude encoding needs a nonzero finite vector");
  }
  if (qubits_for_dim(x.size()) < 0) {
    throw Error(ErrorCode::kDimMismatch, "amplitude encoding needs a power-of-two length");
  }
  EncodedInput in;
  in.features = x;
  in.encoding = Encoding::kAmplitude;
  in.state = DensityMatrix::from_pure((x / norm).cast<Complex>());
  return in;
}

EncodedInput encode_circuit(const RVector& x, const Circuit& tmpl) {
  EncodedInput in;
  in.features = x;
  in.encoding = Encoding::kCircuit;
  in.circuit = bind_slots(tmpl, x);
  in.state = prepare(*in.circuit);
  return in;
}

EncodedInput reencode(const EncodedInput& like, const RVector& x) {
  switch (like.encoding) {
    case Encoding::kAngle: return encode_angle(x, like.circuit->n_qubits);
    case Encoding::kAmplitude: return encode_amplitude(x);
    case Encoding::kCircuit: return encode_circuit(x, *like.circuit);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad encoding");
}

double LossSpec::value(const std::vector<double>& p) const {
  if (kind == Kind::kCrossEntropy) return -std::log(std::max(p.at(label), 1e-300));
  if (weights.size() != p.size()) {
    throw Error(ErrorCode::kDimMismatch, "loss weights do not match outcomes");
  }
  return std::inner_product(p.begin(), p.end(), weights.begin(), 0.0);
}

std::vector<double> LossSpec::derivative(const std::vector<double>& p) const {
  if (kind == Kind::kLinear) {
    if (weights.size() != p.size()) {
      throw Error(ErrorCode::kDimMismatch, "loss weights do not match outcomes");
    }
    return weights;
  }
  std::vector<double> d(p.size(), 0.0);
  d.at(label) = -1.0 / std::max(p[label], 1e-300);
  return d;
}

std::vector<double> sample_distribution(const std::vector<double>& p, int shots,
                                        SplitMix64& rng) {
  std::vector<double> out(p.size(), 0.0);
  std::uint64_t remaining = static_cast<std::uint64_t>(shots);
  double mass = 1.0;
  for (std::size_t c = 0; c + 1 < p.size() && remaining > 0; ++c) {
    const double q = mass > 0.0 ? std::clamp(p[c] / mass, 0.0, 1.0) : 0.0;
    const std::uint64_t k = rng.binomial(remaining, q);
    out[c] = static_cast<double>(k) / shots;
    remaining -= k;
    mass -= p[c];
  }
  out.back() += static_cast<double>(remaining) / shots;
  return out;
}

GradientResult parameter_shift_gradient(const Classifier& a,
                                        const EncodedInput& input,
                                        const LossSpec& loss,
                                        const std::optional<ShotModel>& shots) {
  if (!input.circuit) {
    throw Error(ErrorCode::kNonShiftableGate,
                std::string(encoding_name(input.encoding)) + " encoding has no rotation parameters");
  }
  const Circuit& circuit = *input.circuit;
  const int n = static_cast<int>(input.features.size());
  std::vector<int> op_of_slot(n, -1);
  for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
    const GateOp& op = circuit.ops[i];
    if (!op.slot) continue;
    if (op.kind != GateKind::kRx && op.kind != GateKind::kRy && op.kind != GateKind::kRz) {
      throw Error(ErrorCode::kNonShiftableGate,
                  std::string(gate_name(op.kind)) + " carries encoding slot " +
                      std::to_string(*op.slot));
    }
    if (*op.slot < 0 || *op.slot >= n) {
      throw Error(ErrorCode::kInvalidArgument, "slot out of range");
    }
    op_of_slot[*op.slot] = static_cast<int>(i);
  }

  std::optional<SplitMix64> rng;
  if (shots) rng.emplace(shots->seed);
  GradientResult out;
  auto evaluate = [&](const Circuit& c) {
    ++out.evaluations;
    std::vector<double> p = outcome_distribution(a, prepare(c));
    if (!rng) return p;
    p = sample_distribution(p, shots->shots, *rng);
    // Keep -log p finite for outcomes never observed.
    const double floor = 0.5 / shots->shots;
    for (double& v : p) v = std::max(v, floor);
    return p;
  };

  std::vector<double> base = evaluate(circuit);
  out.loss = loss.value(base);
  const std::vector<double> dl = loss.derivative(base);
  out.gradient = RVector::Zero(n);
  Circuit shifted = circuit;
  for (int k = 0; k < n; ++k) {
    const int i = op_of_slot[k];
    if (i < 0) continue;
    double& theta = shifted.ops[i].params[0];
    const double original = theta;
    theta = original + M_PI / 2;
    std::vector<double> plus = evaluate(shifted);
    theta = original - M_PI / 2;
    std::vector<double> minus = evaluate(shifted);
    theta = original;
    double g = 0.0;
    for (std::size_t c = 0; c < dl.size(); ++c) {
      if (dl[c] != 0.0) g += dl[c] * 0.5 * (plus[c] - minus[c]);
    }
    out.gradient(k) = g;
  }
  return out;
}

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void check_step(const RVector& x, const RVector& grad, double eps) {
  if (x.size() != grad.size()) {
    throw Error(ErrorCode::kDimMismatch, "gradient does not match features");
  }
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kInvalidArgument, "step strength must be finite and >= 0");
  }
}

}  // namespace

RVector fgsm_step(const RVector& x, const RVector& grad, double eps) {
  check_step(x, grad, eps);
  RVector out = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) += eps * sgn(grad(i));
  return out;
}

RVector mask_fgsm_step(const RVector& x, const RVector& grad, double eps,
                       double mask_fraction) {
  check_step(x, grad, eps);
  if (!(mask_fraction > 0.0 && mask_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mask fraction must lie in (0, 1]");
  }
  const int dim = static_cast<int>(x.size());
  const int k = std::min(dim, static_cast<int>(std::ceil(mask_fraction * dim - 1e-12)));
  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return std::abs(grad(i)) > std::abs(grad(j));
  });
  RVector out = x;
  for (int r = 0; r < k; ++r) out(order[r]) += eps * sgn(grad(order[r]));
  return out;
}

std::string_view strategy_name(AttackStrategy strategy) {
  return strategy == AttackStrategy::kFgsm ? "fgsm" : "mask-fgsm";
}

AttackStrategy strategy_from_name(std::string_view name) {
  if (name == "fgsm") return AttackStrategy::kFgsm;
  if (name == "mask-fgsm" || name == "mask_fgsm") return AttackStrategy::kMaskFgsm;
  throw Error(ErrorCode::kInvalidArgument, "unknown attack strategy '" + std::string(name) + "'");
}

void AttackConfig::validate(int n_features) const {
  if (!(strength > 0.0) || !std::isfinite(strength)) {
    throw Error(ErrorCode::kInvalidArgument, "attack strength must be positive");
  }
  if (max_escalations < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max escalations must be >= 0");
  }
  if (shots && *shots < 1) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 1");
  if (strategy == AttackStrategy::kMaskFgsm) {
    if (!(mask_fraction > 0.0 && mask_fraction <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "mask fraction must lie in (0, 1]");
    }
    if (mask_fraction * n_features < 1.0 - 1e-12) {
      throw Error(ErrorCode::kInvalidArgument, "mask selects no feature");
    }
  }
}

AttackResult run_attack(const Classifier& a, const EncodedInput& input,
                        const AttackConfig& cfg) {
  cfg.validate(static_cast<int>(input.features.size()));
  AttackResult out;
  out.original_label = classify(a, input.state);
  std::optional<ShotModel> shots;
  if (cfg.shots) shots = ShotModel{*cfg.shots, cfg.seed};
  GradientResult g = parameter_shift_gradient(
      a, input, LossSpec::cross_entropy(out.original_label), shots);
  out.evaluations = g.evaluations;
  double eps = cfg.strength;
  for (int k = 0; k <= cfg.max_escalations; ++k, eps *= 2.0) {
    RVector x = cfg.strategy == AttackStrategy::kFgsm
                    ? fgsm_step(input.features, g.gradient, eps)
                    : mask_fgsm_step(input.features, g.gradient, eps, cfg.mask_fraction);
    EncodedInput candidate = reencode(input, x);
    ++out.evaluations;
    const int label = classify(a, candidate.state);
    out.escalations_used = k;
    out.final_strength = eps;
    if (label != out.original_label) {
      out.success = true;
      out.rub = fidelity_distance(input.state, candidate.state);
      out.adversarial_label = label;
      out.adversarial = std::move(candidate);
      return out;
    }
  }
  return out;
}

}  // namespace qrover
