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

#ifndef QROVER_QASM_H_
#define QROVER_QASM_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrover {

enum class GateKind {
  kH,
  kX,
  kY,
  kZ,
  kS,
  kT,
  kSdg,
  kTdg,
  kRx,
  kRy,
  kRz,
  kU3,
  kCx,
  kCz,
  kId,
  // Noise markers. params[0] is the probability.
  kBitFlip,
  kPhaseFlip,
  kDepolarizing,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);
int gate_arity(GateKind kind);
int gate_param_count(GateKind kind);
bool is_noise(GateKind kind);
bool is_rotation(GateKind kind);

struct GateOp {
  GateKind kind = GateKind::kId;
  std::vector<int> qubits;
  std::vector<double> params;
  // Differentiable slot bound to params[0]; only rotations carry one.
  std::optional<int> slot;

  bool operator==(const GateOp&) const = default;
};

/// Gate-list circuit. Qubit 0 is the most significant tensor factor.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> ops;
  std::vector<int> measured_qubits;

  bool operator==(const Circuit&) const = default;

  Circuit& add(GateKind kind, std::vector<int> qubits,
               std::vector<double> params = {},
               std::optional<int> slot = std::nullopt);

  /// Throws kInvalidArgument on out-of-range qubits, arity errors,
  /// non-finite angles or duplicate slots.
  void validate() const;

  int slot_count() const;
};

/// Parses the supported OpenQASM 2.0 subset. Noise markers
/// (`bit_flip(p) q[i];`, `phase_flip`, `depolarizing`) and `// @slot k`
/// annotations are accepted as extensions. Throws ParseError.
Circuit parse_qasm(std::string_view source);

/// Emits text that parse_qasm maps back to an identical Circuit.
std::string emit_qasm(const Circuit& circuit);

/// Formatting used for every real number the tool writes (`%.17g`).
std::string format_real(double value);

}  // namespace qrover

#endif  // QROVER_QASM_H_
