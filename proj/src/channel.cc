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

#include "qrover/channel.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "qrover/error.h"
#include "qrover/rng.h"

namespace qrover {
namespace {

constexpr Complex kI(0.0, 1.0);

int bit_of(long index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1L);
}

void check_simulable(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxKrausQubits) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n_qubits) + " qubits exceeds the Kraus limit");
  }
}

}  // namespace

KrausChannel KrausChannel::identity(int dim) {
  return KrausChannel{dim, {CMatrix::Identity(dim, dim)}};
}

CMatrix KrausChannel::apply(const CMatrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::kDimMismatch, "channel/state dimension mismatch");
  }
  CMatrix out = CMatrix::Zero(dim, dim);
  for (const CMatrix& k : ops) out.noalias() += k * rho * k.adjoint();
  return out;
}

CMatrix KrausChannel::adjoint_apply(const CMatrix& m) const {
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorCode::kDimMismatch, "channel/operator dimension mismatch");
  }
  CMatrix out = CMatrix::Zero(dim, dim);
  for (const CMatrix& k : ops) out.noalias() += k.adjoint() * m * k;
  return out;
}

double KrausChannel::completeness_defect() const {
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const CMatrix& k : ops) {
    if (k.rows() != dim || k.cols() != dim) return INFINITY;
    sum.noalias() += k.adjoint() * k;
  }
  return (sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

void KrausChannel::validate(double tol) const {
  if (ops.empty()) throw Error(ErrorCode::kInvalidNoise, "empty Kraus list");
  for (const CMatrix& k : ops) {
    if (!k.allFinite()) throw Error(ErrorCode::kInvalidNoise, "non-finite Kraus");
  }
  double defect = completeness_defect();
  if (!(defect <= tol)) {
    throw Error(ErrorCode::kInvalidNoise,
                "Kraus completeness defect " + std::to_string(defect));
  }
}

SuperOp SuperOp::from_kraus(const KrausChannel& channel) {
  const int n2 = channel.dim * channel.dim;
  SuperOp s{channel.dim, CMatrix::Zero(n2, n2)};
  for (const CMatrix& k : channel.ops) s.matrix.noalias() += kron(k.conjugate(), k);
  return s;
}

CMatrix SuperOp::apply(const CMatrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::kDimMismatch, "superoperator/state mismatch");
  }
  return unvec(matrix * vec(rho), dim);
}

std::string_view noise_kind_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kBitFlip: return "bit_flip";
    case NoiseKind::kPhaseFlip: return "phase_flip";
    case NoiseKind::kDepolarizing: return "depolarizing";
    case NoiseKind::kCustom: return "custom";
  }
  return "?";
}

NoiseKind noise_kind_from_name(std::string_view name) {
  if (name == "bit_flip" || name == "bit-flip") return NoiseKind::kBitFlip;
  if (name == "phase_flip" || name == "phase-flip") return NoiseKind::kPhaseFlip;
  if (name == "depolarizing") return NoiseKind::kDepolarizing;
  if (name == "custom") return NoiseKind::kCustom;
  throw Error(ErrorCode::kInvalidNoise, "unknown noise kind '" +
                                            std::string(name) + "'");
}

std::string_view placement_name(NoisePlacement placement) {
  return placement == NoisePlacement::kEnd ? "end" : "random";
}

NoisePlacement placement_from_name(std::string_view name) {
  if (name == "end") return NoisePlacement::kEnd;
  if (name == "random") return NoisePlacement::kRandom;
  throw Error(ErrorCode::kInvalidNoise, "unknown placement '" +
                                            std::string(name) + "'");
}

void NoiseSpec::validate(int n_qubits) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kBadProbability, "noise probability outside [0, 1]");
  }
  if (kind == NoiseKind::kCustom) {
    if (placement != NoisePlacement::kEnd) {
      throw Error(ErrorCode::kInvalidNoise, "custom noise is end-placement only");
    }
    if (custom_kraus.empty()) {
      throw Error(ErrorCode::kInvalidNoise, "custom noise needs Kraus operators");
    }
    const long dim = custom_kraus.front().rows();
    if (dim != 2 && dim != (1L << n_qubits)) {
      throw Error(ErrorCode::kInvalidNoise,
                  "custom Kraus operators must be 2x2 or full dimension");
    }
    KrausChannel{static_cast<int>(dim), custom_kraus}.validate();
  } else if (placement == NoisePlacement::kRandom && !(p > 0.0)) {
    throw Error(ErrorCode::kBadProbability, "random noise needs p_max in (0, 1]");
  }
}

std::vector<CMatrix> local_noise_kraus(NoiseKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kBadProbability, "noise probability outside [0, 1]");
  }
  switch (kind) {
    case NoiseKind::kBitFlip:
      return {std::sqrt(1.0 - p) * pauli::I(), std::sqrt(p) * pauli::X()};
    case NoiseKind::kPhaseFlip:
      return {std::sqrt(1.0 - p) * pauli::I(), std::sqrt(p) * pauli::Z()};
    case NoiseKind::kDepolarizing: {
      double q = std::sqrt(p / 4.0);
      return {std::sqrt(1.0 - 3.0 * p / 4.0) * pauli::I(), q * pauli::X(),
              q * pauli::Y(), q * pauli::Z()};
    }
    case NoiseKind::kCustom:
      break;
  }
  throw Error(ErrorCode::kInvalidNoise, "custom noise has no standard Kraus form");
}

KrausChannel standard_noise(NoiseKind kind, double p, int qubit, int n_qubits) {
  check_simulable(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw Error(ErrorCode::kOutOfRange, "noise qubit out of range");
  }
  KrausChannel out{1 << n_qubits, {}};
  for (const CMatrix& k : local_noise_kraus(kind, p)) {
    out.ops.push_back(lift(k, {qubit}, n_qubits));
  }
  return out;
}

Circuit inject_random_noise(const Circuit& circuit, std::uint64_t seed,
                            double p_max) {
  if (!(p_max > 0.0 && p_max <= 1.0)) {
    throw Error(ErrorCode::kBadProbability, "p_max must lie in (0, 1]");
  }
  constexpr GateKind kKinds[] = {GateKind::kBitFlip, GateKind::kPhaseFlip,
                                 GateKind::kDepolarizing};
  SplitMix64 rng(seed);
  // insertion index in the original op list -> markers, in qubit order
  std::multimap<std::size_t, GateOp> inserts;
  for (int q = 0; q < circuit.n_qubits; ++q) {
    std::vector<std::size_t> touching;
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
      const auto& qs = circuit.ops[i].qubits;
      if (std::find(qs.begin(), qs.end(), q) != qs.end()) touching.push_back(i);
    }
    GateKind kind = kKinds[rng.below(3)];
    std::uint64_t position = rng.below(touching.size() + 1);
    double p = p_max * rng.uniform_open_closed();
    std::size_t at;
    if (position == 0) {
      at = touching.empty() ? circuit.ops.size() : touching.front();
    } else {
      at = touching[position - 1] + 1;
    }
    inserts.emplace(at, GateOp{kind, {q}, {p}, std::nullopt});
  }
  Circuit out = circuit;
  out.ops.clear();
  for (std::size_t i = 0; i <= circuit.ops.size(); ++i) {
    auto [lo, hi] = inserts.equal_range(i);
    for (auto it = lo; it != hi; ++it) out.ops.push_back(it->second);
    if (i < circuit.ops.size()) out.ops.push_back(circuit.ops[i]);
  }
  return out;
}

Circuit expand_noise(const Circuit& circuit,
                     const std::optional<NoiseSpec>& noise) {
  if (!noise) return circuit;
  noise->validate(circuit.n_qubits);
  if (noise->placement == NoisePlacement::kRandom) {
    return inject_random_noise(circuit, noise->seed, noise->p);
  }
  Circuit out = circuit;
  if (noise->kind == NoiseKind::kCustom) return out;
  GateKind marker = noise->kind == NoiseKind::kBitFlip    ? GateKind::kBitFlip
                    : noise->kind == NoiseKind::kPhaseFlip ? GateKind::kPhaseFlip
                                                           : GateKind::kDepolarizing;
  for (int q = 0; q < circuit.n_qubits; ++q) out.add(marker, {q}, {noise->p});
  return out;
}

CMatrix gate_matrix(const GateOp& op) {
  const double a = op.params.empty() ? 0.0 : op.params[0];
  CMatrix m(2, 2);
  switch (op.kind) {
    case GateKind::kH:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::kX: return pauli::X();
    case GateKind::kY: return pauli::Y();
    case GateKind::kZ: return pauli::Z();
    case GateKind::kId: return pauli::I();
    case GateKind::kS:
      m << 1, 0, 0, kI;
      return m;
    case GateKind::kSdg:
      m << 1, 0, 0, -kI;
      return m;
    case GateKind::kT:
      m << 1, 0, 0, std::exp(kI * (M_PI / 4));
      return m;
    case GateKind::kTdg:
      m << 1, 0, 0, std::exp(-kI * (M_PI / 4));
      return m;
    case GateKind::kRx:
      m << std::cos(a / 2), -kI * std::sin(a / 2), -kI * std::sin(a / 2),
          std::cos(a / 2);
      return m;
    case GateKind::kRy:
      m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
      return m;
    case GateKind::kRz:
      m << std::exp(-kI * (a / 2)), 0, 0, std::exp(kI * (a / 2));
      return m;
    case GateKind::kU3: {
      const double theta = op.params[0];
      const double phi = op.params[1];
      const double lambda = op.params[2];
      m << std::cos(theta / 2), -std::exp(kI * lambda) * std::sin(theta / 2),
          std::exp(kI * phi) * std::sin(theta / 2),
          std::exp(kI * (phi + lambda)) * std::cos(theta / 2);
      return m;
    }
    case GateKind::kCx: {
      CMatrix c = CMatrix::Zero(4, 4);
      c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1;
      return c;
    }
    case GateKind::kCz: {
      CMatrix c = CMatrix::Identity(4, 4);
      c(3, 3) = -1;
      return c;
    }
    case GateKind::kBitFlip:
    case GateKind::kPhaseFlip:
    case GateKind::kDepolarizing:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "noise markers have no unitary");
}

void apply_local_left(CMatrix& m, const CMatrix& local,
                      const std::vector<int>& qubits, int n_qubits) {
  const int k = static_cast<int>(qubits.size());
  const long sub = 1L << k;
  const long dim = 1L << n_qubits;
  if (local.rows() != sub || local.cols() != sub || m.rows() != dim) {
    throw Error(ErrorCode::kDimMismatch, "local operator shape mismatch");
  }
  long mask = 0;
  std::vector<long> offsets(sub, 0);
  for (int j = 0; j < k; ++j) {
    long bit = 1L << (n_qubits - 1 - qubits[j]);
    mask |= bit;
    for (long s = 0; s < sub; ++s) {
      if ((s >> (k - 1 - j)) & 1L) offsets[s] |= bit;
    }
  }
  CMatrix rows(sub, m.cols());
  for (long base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (long s = 0; s < sub; ++s) rows.row(s) = m.row(base | offsets[s]);
    CMatrix mixed = local * rows;
    for (long s = 0; s < sub; ++s) m.row(base | offsets[s]) = mixed.row(s);
  }
}

CMatrix lift(const CMatrix& local, const std::vector<int>& qubits,
             int n_qubits) {
  CMatrix full = CMatrix::Identity(1L << n_qubits, 1L << n_qubits);
  apply_local_left(full, local, qubits, n_qubits);
  return full;
}

namespace {

void apply_unitary(CMatrix& rho, const CMatrix& u,
                   const std::vector<int>& qubits, int n_qubits) {
  apply_local_left(rho, u, qubits, n_qubits);
  CMatrix t = rho.adjoint();
  apply_local_left(t, u, qubits, n_qubits);
  rho = t.adjoint();
}

void apply_local_kraus(CMatrix& rho, const std::vector<CMatrix>& kraus,
                       const std::vector<int>& qubits, int n_qubits) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const CMatrix& k : kraus) {
    CMatrix term = rho;
    apply_unitary(term, k, qubits, n_qubits);
    out += term;
  }
  rho = std::move(out);
}

NoiseKind marker_kind(GateKind kind) {
  switch (kind) {
    case GateKind::kBitFlip: return NoiseKind::kBitFlip;
    case GateKind::kPhaseFlip: return NoiseKind::kPhaseFlip;
    default: return NoiseKind::kDepolarizing;
  }
}

}  // namespace

CMatrix simulate(const Circuit& circuit, const CMatrix& rho) {
  check_simulable(circuit.n_qubits);
  const long dim = 1L << circuit.n_qubits;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::kDimMismatch, "state does not match circuit width");
  }
  CMatrix out = rho;
  for (const GateOp& op : circuit.ops) {
    if (is_noise(op.kind)) {
      apply_local_kraus(out, local_noise_kraus(marker_kind(op.kind), op.params[0]),
                        op.qubits, circuit.n_qubits);
    } else {
      apply_unitary(out, gate_matrix(op), op.qubits, circuit.n_qubits);
    }
  }
  return out;
}

KrausChannel canonicalize(const KrausChannel& channel) {
  const int dim = channel.dim;
  const long n2 = static_cast<long>(dim) * dim;
  CMatrix choi = CMatrix::Zero(n2, n2);
  for (const CMatrix& k : channel.ops) {
    CVector v = vec(k);
    choi.noalias() += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (choi + choi.adjoint()));
  const RVector& values = solver.eigenvalues();
  const double top = values.maxCoeff();
  KrausChannel out{dim, {}};
  for (long i = n2 - 1; i >= 0; --i) {
    if (values(i) <= 1e-14 * std::max(top, 1.0)) break;
    out.ops.push_back(std::sqrt(values(i)) * unvec(solver.eigenvectors().col(i), dim));
  }
  if (out.ops.empty()) out.ops.push_back(CMatrix::Zero(dim, dim));
  return out;
}

CompiledChannel compile_channel(const Circuit& circuit,
                                const std::optional<NoiseSpec>& noise,
                                const CompileOptions& options) {
  circuit.validate();
  const int n = circuit.n_qubits;
  check_simulable(n);
  if (options.superop && n > kMaxSuperOpQubits) {
    throw Error(ErrorCode::kTooLarge, "superoperator limited to " +
                                          std::to_string(kMaxSuperOpQubits) +
                                          " qubits");
  }
  Circuit program = expand_noise(circuit, noise);
  bool noisy = noise.has_value();
  for (const GateOp& op : program.ops) noisy = noisy || is_noise(op.kind);
  if (noisy && n > kMaxNoisyQubits) {
    throw Error(ErrorCode::kTooLarge, "noisy channels limited to " +
                                          std::to_string(kMaxNoisyQubits) +
                                          " qubits");
  }

  const int dim = 1 << n;
  const std::size_t max_ops = static_cast<std::size_t>(dim) * dim;
  KrausChannel kraus = KrausChannel::identity(dim);
  CMatrix pending = CMatrix::Identity(dim, dim);
  bool have_pending = false;
  auto flush = [&] {
    if (!have_pending) return;
    for (CMatrix& k : kraus.ops) k = pending * k;
    pending.setIdentity();
    have_pending = false;
  };
  auto compose_local = [&](const std::vector<CMatrix>& local,
                           const std::vector<int>& qubits) {
    flush();
    std::vector<CMatrix> next;
    next.reserve(kraus.ops.size() * local.size());
    for (const CMatrix& l : local) {
      for (const CMatrix& k : kraus.ops) {
        CMatrix term = k;
        apply_local_left(term, l, qubits, n);
        next.push_back(std::move(term));
      }
    }
    kraus.ops = std::move(next);
    if (kraus.ops.size() > max_ops) kraus = canonicalize(kraus);
  };

  for (const GateOp& op : program.ops) {
    if (is_noise(op.kind)) {
      compose_local(local_noise_kraus(marker_kind(op.kind), op.params[0]),
                    op.qubits);
    } else {
      apply_local_left(pending, gate_matrix(op), op.qubits, n);
      have_pending = true;
    }
  }
  flush();
  if (noise && noise->kind == NoiseKind::kCustom) {
    if (noise->custom_kraus.front().rows() == 2) {
      for (int q = 0; q < n; ++q) compose_local(noise->custom_kraus, {q});
    } else {
      std::vector<int> all(n);
      for (int q = 0; q < n; ++q) all[q] = q;
      compose_local(noise->custom_kraus, all);
    }
  }

  CompiledChannel out;
  out.kraus = std::move(kraus);
  if (options.superop) out.superop = SuperOp::from_kraus(out.kraus);
  return out;
}

}  // namespace qrover
