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

#ifndef QROVER_CHANNEL_H_
#define QROVER_CHANNEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrover/linalg.h"
#include "qrover/qasm.h"

namespace qrover {

/// CPTP map in Kraus form, rho -> sum_k K rho K^dagger.
struct KrausChannel {
  int dim = 1;
  std::vector<CMatrix> ops;

  static KrausChannel identity(int dim);

  CMatrix apply(const CMatrix& rho) const;
  /// Heisenberg-picture dual, M -> sum_k K^dagger M K.
  CMatrix adjoint_apply(const CMatrix& m) const;
  /// Max-norm of sum_k K^dagger K - I.
  double completeness_defect() const;
  /// Throws kInvalidNoise if incomplete.
  void validate(double tol = default_tolerances().completeness) const;
};

/// Dense N^2 x N^2 matrix acting on column-stacked density matrices; the
/// Kraus operator K contributes conj(K) (x) K.
struct SuperOp {
  int dim = 1;
  CMatrix matrix;

  static SuperOp from_kraus(const KrausChannel& channel);
  CMatrix apply(const CMatrix& rho) const;
};

enum class NoiseKind { kBitFlip, kPhaseFlip, kDepolarizing, kCustom };
enum class NoisePlacement { kEnd, kRandom };

std::string_view noise_kind_name(NoiseKind kind);
NoiseKind noise_kind_from_name(std::string_view name);
std::string_view placement_name(NoisePlacement placement);
NoisePlacement placement_from_name(std::string_view name);

/// Noise applied on top of a circuit.
///
/// End placement applies `kind` with probability `p` to every qubit after
/// the last gate. Custom Kraus operators are either 2x2 (applied to every
/// qubit) or N x N (applied once); custom noise is end-placement only.
/// Random placement ignores `kind` and treats `p` as the upper limit of the
/// sampled probabilities, see inject_random_noise.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::kDepolarizing;
  double p = 0.0;
  std::vector<CMatrix> custom_kraus;
  NoisePlacement placement = NoisePlacement::kEnd;
  std::uint64_t seed = 0;

  /// Throws kBadProbability / kInvalidNoise.
  void validate(int n_qubits) const;
};

/// Single-qubit Kraus operators for a standard noise kind.
std::vector<CMatrix> local_noise_kraus(NoiseKind kind, double p);

/// Standard noise on `qubit`, lifted to n_qubits. Depolarizing uses the
/// Pauli form {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}, which
/// equals rho -> (1-p) rho + p I/2.
KrausChannel standard_noise(NoiseKind kind, double p, int qubit, int n_qubits);

/// Inserts one noise marker per qubit (ascending qubit order). For each
/// qubit the SplitMix64 stream is consumed as kind (uniform over bit-flip,
/// phase-flip, depolarizing), position (uniform over the qubit's gate
/// boundaries) and probability (uniform on (0, p_max]).
Circuit inject_random_noise(const Circuit& circuit, std::uint64_t seed,
                            double p_max);

/// Circuit with every noise marker implied by `noise` materialized in-line.
/// Custom Kraus noise has no marker form and is left out.
Circuit expand_noise(const Circuit& circuit,
                     const std::optional<NoiseSpec>& noise);

struct CompileOptions {
  bool superop = true;
};

struct CompiledChannel {
  KrausChannel kraus;
  std::optional<SuperOp> superop;
};

constexpr int kMaxKrausQubits = 10;
constexpr int kMaxNoisyQubits = 6;
constexpr int kMaxSuperOpQubits = 6;

/// Compiles a circuit (plus optional noise) to a channel. Operations are
/// composed in program order; the Kraus list is re-canonicalized through
/// the Choi matrix whenever it exceeds N^2 operators.
CompiledChannel compile_channel(const Circuit& circuit,
                                const std::optional<NoiseSpec>& noise = {},
                                const CompileOptions& options = {});

/// 2x2 (or 4x4 for cx/cz) unitary of a gate; qubit order as in op.qubits.
CMatrix gate_matrix(const GateOp& op);

/// Full-register operator of a small unitary acting on `qubits`.
CMatrix lift(const CMatrix& local, const std::vector<int>& qubits,
             int n_qubits);

/// In-place m <- U_full * m for a local operator on `qubits`.
void apply_local_left(CMatrix& m, const CMatrix& local,
                      const std::vector<int>& qubits, int n_qubits);

/// Gate-by-gate density-matrix simulation, noise markers included.
CMatrix simulate(const Circuit& circuit, const CMatrix& rho);

/// Minimal Kraus representation from the Choi matrix.
KrausChannel canonicalize(const KrausChannel& channel);

}  // namespace qrover

#endif  // QROVER_CHANNEL_H_
