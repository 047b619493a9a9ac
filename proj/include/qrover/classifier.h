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

#ifndef QROVER_CLASSIFIER_H_
#define QROVER_CLASSIFIER_H_

#include <optional>
#include <string>
#include <vector>

#include "qrover/channel.h"
#include "qrover/linalg.h"
#include "qrover/qasm.h"

namespace qrover {

/// Measurement with one PSD element per label, summing to the identity.
struct Povm {
  std::vector<std::string> labels;
  std::vector<CMatrix> elements;

  int size() const { return static_cast<int>(elements.size()); }
  int dim() const;
  /// Throws kInvalidPovm.
  void validate(const Tolerances& tol = default_tolerances()) const;
  /// Dense index of a label; throws kInvalidArgument when absent.
  int index_of(const std::string& label) const;

  /// Two-outcome Z measurement of one qubit: {|0><0|, |1><1|} (x) I.
  static Povm z_basis(int n_qubits, int qubit,
                      std::vector<std::string> labels = {"0", "1"});
  /// Full computational-basis measurement, labels "0".."N-1".
  static Povm computational(int n_qubits);
};

/// A channel followed by a POVM. `circuit` is the noise-expanded source
/// circuit when the classifier came from one.
struct Classifier {
  CompiledChannel channel;
  Povm povm;
  int n_qubits = 0;
  std::optional<Circuit> circuit;

  static Classifier from_circuit(const Circuit& circuit, Povm povm,
                                 const std::optional<NoiseSpec>& noise = {});
  static Classifier from_kraus(KrausChannel kraus, Povm povm);

  int dim() const { return channel.kraus.dim; }
  void validate() const;
};

/// p_c = Tr[M_c E(rho)]; entries clamped to [0, 1] and renormalized when the
/// total is within tolerance of 1, otherwise kDistributionInvalid.
std::vector<double> outcome_distribution(const Classifier& a,
                                         const DensityMatrix& rho);

/// Argmax of a distribution, ties to the smallest index.
int argmax_label(const std::vector<double>& dist);

int classify(const Classifier& a, const DensityMatrix& rho);

/// (z + 1) / 2 for a Pauli-Z expectation z in [-1, 1].
double expectation_to_probability(double z_expect);

}  // namespace qrover

#endif  // QROVER_CLASSIFIER_H_
