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

#include <random>

#include "gtest/gtest.h"
#include "qrover/error.h"
#include "test_util.h"

namespace qrover {
namespace {

TEST(Povm, ZBasisAndComputational) {
  Povm z = Povm::z_basis(2, 1);
  z.validate();
  EXPECT_EQ(z.size(), 2);
  EXPECT_EQ(z.dim(), 4);
  EXPECT_NEAR(z.elements[0](2, 2).real(), 1.0, 1e-15);
  EXPECT_NEAR(z.elements[0](1, 1).real(), 0.0, 1e-15);
  Povm full = Povm::computational(2);
  full.validate();
  EXPECT_EQ(full.size(), 4);
  EXPECT_EQ(full.index_of("3"), 3);
  EXPECT_THROW(full.index_of("x"), Error);
}

TEST(Povm, RejectsBadElements) {
  Povm p = Povm::z_basis(1, 0);
  p.elements[0] *= 0.9;
  EXPECT_THROW(p.validate(), Error);
  Povm q = Povm::z_basis(1, 0);
  q.elements[0](0, 1) = 0.1;
  EXPECT_THROW(q.validate(), Error);
  Povm single;
  single.labels = {"only"};
  single.elements = {CMatrix::Identity(2, 2)};
  EXPECT_THROW(single.validate(), Error);
}

TEST(OutcomeDistribution, BellCircuit) {
  Circuit c;
  c.n_qubits = 2;
  c.add(GateKind::kH, {0});
  c.add(GateKind::kCx, {0, 1});
  Classifier a = Classifier::from_circuit(c, Povm::computational(2));
  std::vector<double> p = outcome_distribution(a, DensityMatrix::basis(4, 0));
  ASSERT_EQ(p.size(), 4u);
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[3], 0.5, 1e-12);
  EXPECT_NEAR(p[1] + p[2], 0.0, 1e-12);
  EXPECT_EQ(classify(a, DensityMatrix::basis(4, 0)), 0);
}

TEST(OutcomeDistribution, SumsToOneOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3;
    Classifier a = Classifier::from_circuit(testing::random_circuit(n, 8, rng, true),
                                            testing::random_povm(1 << n, 3, rng));
    std::vector<double> p = outcome_distribution(a, testing::random_state(1 << n, rng));
    double total = 0;
    for (double v : p) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      total += v;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(OutcomeDistribution, DimensionMismatch) {
  Classifier a = Classifier::from_kraus(KrausChannel::identity(2), Povm::z_basis(1, 0));
  EXPECT_THROW(outcome_distribution(a, DensityMatrix::basis(4, 0)), Error);
}

TEST(ArgmaxLabel, TiesGoToSmallestIndex) {
  EXPECT_EQ(argmax_label({0.5, 0.5}), 0);
  EXPECT_EQ(argmax_label({0.2, 0.4, 0.4}), 1);
  EXPECT_EQ(argmax_label({0.1, 0.9}), 1);
}

TEST(ExpectationToProbability, Range) {
  EXPECT_DOUBLE_EQ(expectation_to_probability(1.0), 1.0);
  EXPECT_DOUBLE_EQ(expectation_to_probability(-1.0), 0.0);
  EXPECT_DOUBLE_EQ(expectation_to_probability(0.0), 0.5);
  EXPECT_THROW(expectation_to_probability(1.5), Error);
}

}  // namespace
}  // namespace qrover
