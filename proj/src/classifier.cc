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

#include "qrover/classifier.h"

#include <algorithm>
#include <cmath>

#include "qrover/error.h"

namespace qrover {

int Povm::dim() const {
  return elements.empty() ? 0 : static_cast<int>(elements.front().rows());
}

void Povm::validate(const Tolerances& tol) const {
  if (elements.size() < 2) {
    throw Error(ErrorCode::kInvalidPovm, "a POVM needs at least two elements");
  }
  if (labels.size() != elements.size()) {
    throw Error(ErrorCode::kInvalidPovm, "label count differs from element count");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw Error(ErrorCode::kInvalidPovm, "duplicate label '" + labels[i] + "'");
      }
    }
  }
  const long n = elements.front().rows();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const CMatrix& m : elements) {
    if (m.rows() != n || m.cols() != n || !m.allFinite()) {
      throw Error(ErrorCode::kInvalidPovm, "element shape mismatch");
    }
    if (!is_hermitian(m, tol.hermitian)) {
      throw Error(ErrorCode::kInvalidPovm, "element is not Hermitian");
    }
    if (min_eigenvalue(m) < -tol.psd) {
      throw Error(ErrorCode::kInvalidPovm, "element is not PSD");
    }
    sum += m;
  }
  double defect = (sum - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tol.completeness) {
    throw Error(ErrorCode::kInvalidPovm,
                "elements do not sum to identity (defect " +
                    std::to_string(defect) + ")");
  }
}

int Povm::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown label '" + label + "'");
  }
  return static_cast<int>(it - labels.begin());
}

Povm Povm::z_basis(int n_qubits, int qubit, std::vector<std::string> labels) {
  if (labels.size() != 2) {
    throw Error(ErrorCode::kInvalidPovm, "Z-basis POVM has two labels");
  }
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  CMatrix m0 = lift(p0, {qubit}, n_qubits);
  const long dim = m0.rows();
  return Povm{std::move(labels), {m0, CMatrix::Identity(dim, dim) - m0}};
}

Povm Povm::computational(int n_qubits) {
  const int dim = 1 << n_qubits;
  Povm povm;
  for (int i = 0; i < dim; ++i) {
    CMatrix m = CMatrix::Zero(dim, dim);
    m(i, i) = 1;
    povm.labels.push_back(std::to_string(i));
    povm.elements.push_back(m);
  }
  return povm;
}

Classifier Classifier::from_circuit(const Circuit& circuit, Povm povm,
                                    const std::optional<NoiseSpec>& noise) {
  Classifier a;
  a.n_qubits = circuit.n_qubits;
  CompileOptions options;
  options.superop = circuit.n_qubits <= 4;
  a.channel = compile_channel(circuit, noise, options);
  a.povm = std::move(povm);
  a.circuit = expand_noise(circuit, noise);
  a.validate();
  return a;
}

Classifier Classifier::from_kraus(KrausChannel kraus, Povm povm) {
  Classifier a;
  a.n_qubits = qubits_for_dim(kraus.dim);
  if (a.n_qubits < 0) {
    throw Error(ErrorCode::kDimMismatch, "channel dimension is not 2^n");
  }
  kraus.validate();
  if (a.n_qubits <= 4) a.channel.superop = SuperOp::from_kraus(kraus);
  a.channel.kraus = std::move(kraus);
  a.povm = std::move(povm);
  a.validate();
  return a;
}

void Classifier::validate() const {
  povm.validate();
  if (povm.dim() != channel.kraus.dim) {
    throw Error(ErrorCode::kDimMismatch, "POVM and channel dimensions differ");
  }
}

std::vector<double> outcome_distribution(const Classifier& a,
                                         const DensityMatrix& rho) {
  if (rho.dim() != a.dim()) {
    throw Error(ErrorCode::kDimMismatch, "state does not match classifier");
  }
  CMatrix out = a.channel.kraus.apply(rho.matrix());
  std::vector<double> p(a.povm.size());
  double total = 0.0;
  for (int c = 0; c < a.povm.size(); ++c) {
    double v = (a.povm.elements[c].cwiseProduct(out.transpose())).sum().real();
    p[c] = std::clamp(v, 0.0, 1.0);
    total += p[c];
  }
  if (!(std::abs(total - 1.0) <= default_tolerances().distribution)) {
    throw Error(ErrorCode::kDistributionInvalid,
                "outcome probabilities sum to " + std::to_string(total));
  }
  for (double& v : p) v /= total;
  return p;
}

int argmax_label(const std::vector<double>& dist) {
  if (dist.empty()) throw Error(ErrorCode::kTooFewClasses, "empty distribution");
  int best = 0;
  for (int c = 1; c < static_cast<int>(dist.size()); ++c) {
    if (dist[c] > dist[best]) best = c;
  }
  return best;
}

int classify(const Classifier& a, const DensityMatrix& rho) {
  return argmax_label(outcome_distribution(a, rho));
}

double expectation_to_probability(double z_expect) {
  if (!(z_expect >= -1.0 && z_expect <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "expectation outside [-1, 1]");
  }
  return (z_expect + 1.0) / 2.0;
}

}  // namespace qrover
