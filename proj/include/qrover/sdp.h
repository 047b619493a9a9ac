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

#ifndef QROVER_SDP_H_
#define QROVER_SDP_H_

#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qrover {

/// Real block-diagonal semidefinite program in inequality (LMI) form:
///
///   maximize    b^T y
///   subject to  Z = C - sum_i y_i A_i  is PSD     (one Z per block)
///               z = c_lp - A_lp y      is >= 0    (linear block)
///
/// with the usual primal  minimize <C, X> s.t. <A_i, X> = b_i, X PSD.
/// Constraint matrices are sparse and symmetric: an entry (block, row, col,
/// value) with row != col sets both (row, col) and (col, row).
struct SdpProblem {
  struct Entry {
    int block;
    int row;
    int col;
    double value;
  };

  std::vector<int> block_sizes;
  std::vector<Eigen::MatrixXd> c;
  Eigen::VectorXd c_lp;
  Eigen::VectorXd b;
  std::vector<std::vector<Entry>> a;  // one list per variable y_i
  Eigen::MatrixXd a_lp;               // lp_size x m

  int variables() const { return static_cast<int>(b.size()); }
  int lp_size() const { return static_cast<int>(c_lp.size()); }
};

enum class SdpStatus { kOptimal, kNearOptimal, kMaxIterations, kNumericalError };

std::string_view sdp_status_name(SdpStatus status);

struct SdpOptions {
  double tolerance = 1e-8;
  int max_iterations = 100;
  /// Solutions whose residuals reach tolerance * near_optimal_factor are
  /// returned as kNearOptimal instead of failing.
  double near_optimal_factor = 1e3;
};

struct SdpResult {
  SdpStatus status = SdpStatus::kNumericalError;
  Eigen::VectorXd y;
  std::vector<Eigen::MatrixXd> z;  // dual slack blocks
  std::vector<Eigen::MatrixXd> x;  // primal blocks
  Eigen::VectorXd z_lp;
  Eigen::VectorXd x_lp;
  double primal_objective = 0.0;  // <C, X>
  double dual_objective = 0.0;    // b^T y
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double relative_gap = 0.0;
  int iterations = 0;

  bool ok() const {
    return status == SdpStatus::kOptimal || status == SdpStatus::kNearOptimal;
  }
};

/// Infeasible-start primal-dual path-following method with the HKM search
/// direction and Mehrotra predictor-corrector steps.
SdpResult solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

/// Solver tolerance, overridable through QROVER_SOLVER_TOL.
double default_solver_tolerance();

}  // namespace qrover

#endif  // QROVER_SDP_H_
