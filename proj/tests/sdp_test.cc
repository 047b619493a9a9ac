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

#include "qrover/sdp.h"

#include <cstdlib>

#include "gtest/gtest.h"

namespace qrover {
namespace {

// max y s.t. [[1, y], [y, 1]] PSD  ->  y = 1.
TEST(SolveSdp, TwoByTwoCorrelation) {
  SdpProblem p;
  p.block_sizes = {2};
  p.c = {Eigen::MatrixXd::Identity(2, 2)};
  p.b = Eigen::VectorXd::Constant(1, 1.0);
  p.a = {{{0, 0, 1, -1.0}}};
  p.c_lp = Eigen::VectorXd(0);
  p.a_lp = Eigen::MatrixXd(0, 1);
  SdpResult r = solve_sdp(p, {});
  ASSERT_TRUE(r.ok()) << sdp_status_name(r.status);
  EXPECT_NEAR(r.y(0), 1.0, 1e-6);
  EXPECT_NEAR(r.dual_objective, 1.0, 1e-6);
}

// max -y0 - y1 s.t. diag(y0, y1) - I PSD with an LP bound y0 <= 3.
TEST(SolveSdp, DiagonalWithLinearBlock) {
  SdpProblem p;
  p.block_sizes = {2};
  p.c = {-Eigen::MatrixXd::Identity(2, 2)};
  p.b = Eigen::Vector2d(-1.0, -1.0);
  p.a = {{{0, 0, 0, -1.0}}, {{0, 1, 1, -1.0}}};
  p.c_lp = Eigen::VectorXd::Constant(1, 3.0);
  p.a_lp = Eigen::MatrixXd(1, 2);
  p.a_lp << 1.0, 0.0;
  SdpResult r = solve_sdp(p, {});
  ASSERT_TRUE(r.ok()) << sdp_status_name(r.status);
  EXPECT_NEAR(r.y(0), 1.0, 1e-6);
  EXPECT_NEAR(r.y(1), 1.0, 1e-6);
  EXPECT_NEAR(r.primal_objective, r.dual_objective, 1e-6);
}

// Smallest eigenvalue as an SDP: max t s.t. S - t I PSD.
TEST(SolveSdp, MinimumEigenvalue) {
  Eigen::MatrixXd s(3, 3);
  s << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  SdpProblem p;
  p.block_sizes = {3};
  p.c = {s};
  p.b = Eigen::VectorXd::Constant(1, 1.0);
  p.a = {{{0, 0, 0, 1.0}, {0, 1, 1, 1.0}, {0, 2, 2, 1.0}}};
  p.c_lp = Eigen::VectorXd(0);
  p.a_lp = Eigen::MatrixXd(0, 1);
  SdpResult r = solve_sdp(p, {});
  ASSERT_TRUE(r.ok());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  EXPECT_NEAR(r.y(0), eig.eigenvalues()(0), 1e-7);
}

TEST(DefaultSolverTolerance, ReadsEnvironment) {
  setenv("QROVER_SOLVER_TOL", "1e-6", 1);
  EXPECT_DOUBLE_EQ(default_solver_tolerance(), 1e-6);
  setenv("QROVER_SOLVER_TOL", "garbage", 1);
  EXPECT_DOUBLE_EQ(default_solver_tolerance(), 1e-8);
  unsetenv("QROVER_SOLVER_TOL");
  EXPECT_DOUBLE_EQ(default_solver_tolerance(), 1e-8);
}

}  // namespace
}  // namespace qrover
