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

#ifndef QROVER_BOUNDS_H_
#define QROVER_BOUNDS_H_

#include <optional>
#include <span>
#include <vector>

#include "qrover/classifier.h"
#include "qrover/linalg.h"
#include "qrover/sdp.h"

namespace qrover {

/// Fidelity-distance radius that may be infinite (no adversarial state
/// exists). Infinity is its own state, never a float sentinel.
class Radius {
 public:
  static Radius finite(double value) { return Radius(false, value); }
  static Radius infinite() { return Radius(true, 0.0); }

  bool is_infinite() const { return infinite_; }
  /// Throws kOutOfRange for an infinite radius.
  double value() const;

  bool operator==(const Radius& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }
  /// Strict ordering with infinity above every finite value.
  bool operator<(const Radius& other) const {
    if (infinite_) return false;
    return other.infinite_ || value_ < other.value_;
  }
  bool exceeds(double eps) const { return infinite_ || value_ > eps; }

 private:
  Radius(bool infinite, double value) : infinite_(infinite), value_(value) {}
  bool infinite_;
  double value_;
};

/// min over c != c* of (sqrt(p_c*) - sqrt(p_c))^2 / 2 where c* is the
/// (tie-broken) argmax. Every state within this fidelity distance keeps the
/// label. Throws kTooFewClasses / kDistributionInvalid.
double robustness_lower_bound(std::span<const double> dist);

struct SdpSettings {
  double tolerance = default_solver_tolerance();
  int max_iterations = 100;
  /// Eigenvalue threshold (relative to the constraint's scale) below which
  /// the misclassification constraint is treated as infeasible or as a face.
  double feasibility_tolerance = 1e-9;
};

/// Result of maximizing F(rho, sigma) over states with Tr[A sigma] <= 0.
struct HalfspaceOptimum {
  bool feasible = false;
  double fidelity = 0.0;
  std::optional<DensityMatrix> sigma;
  SdpStatus status = SdpStatus::kOptimal;
  int iterations = 0;
  bool solver_called = false;
};

/// Uses the block characterization
///   sqrt F(rho, sigma) = max { Re Tr X : [[rho, X], [X^dagger, sigma]] PSD },
/// restricted to the support of rho, in a real embedding of the complex
/// cone. Infeasibility is decided exactly from the spectrum of A; when A is
/// PSD with a kernel the problem is solved on that face. Throws
/// kSolverFailure when the interior-point method does not converge.
HalfspaceOptimum max_fidelity_halfspace(const DensityMatrix& rho,
                                        const CMatrix& a,
                                        const SdpSettings& settings = {});

struct OptimalRadius {
  Radius eps_star = Radius::infinite();
  std::optional<DensityMatrix> witness;
  std::optional<int> target_label;
  int predicted_label = 0;
  /// One entry per label; the predicted label holds an infinite radius.
  std::vector<Radius> per_label;
  int sdp_solves = 0;
};

/// Exact robustness radius: the minimum fidelity distance from rho to a state
/// whose channel output gives some other label at least the predicted
/// label's probability. One SDP per competing label, A_c = E^dagger(M_c* - M_c).
OptimalRadius optimal_radius(const Classifier& a, const DensityMatrix& rho,
                             const SdpSettings& settings = {});

struct RobustnessBounds {
  double rlb = 0.0;
  std::optional<Radius> optimal;
  std::optional<double> rub;
  std::optional<DensityMatrix> witness;
  std::optional<int> target_label;

  /// rub - rlb when both are present.
  std::optional<double> gap() const;
};

/// Packs the three quantities and enforces rlb <= optimal <= rub (within
/// `tol`); a violation throws kSandwichViolation and means a bug upstream.
RobustnessBounds assemble_bounds(double rlb, std::optional<Radius> optimal,
                                 std::optional<double> rub,
                                 std::optional<DensityMatrix> witness = {},
                                 std::optional<int> target_label = {},
                                 double tol = 1e-6);

}  // namespace qrover

#endif  // QROVER_BOUNDS_H_
