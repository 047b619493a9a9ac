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

#include <gtest/gtest.h>

#include <cmath>

#include "qrover/error.h"
#include "qrover/train.h"

namespace qrover {
namespace {

LabeledDataset toy_set() {
  LabeledDataset data;
  data.name = "toy";
  data.n_qubits = 1;
  data.encoding = Encoding::kAngle;
  for (int i = 0; i < 12; ++i) {
    const double magnitude = 0.3 + 0.08 * i;
    RVector x(1);
    x(0) = i % 2 ? magnitude : -magnitude;
    data.items.push_back(DatasetItem::features(encode_angle(x, 1), i % 2 ? "pos" : "neg"));
  }
  return data;
}

VariationalModel toy_model() {
  return VariationalModel::create(1, 1, 0, {"neg", "pos"}, 3);
}

TEST(Ansatz, Shape) {
  Circuit c = variational_ansatz(3, 2);
  EXPECT_EQ(c.slot_count(), 12);
  int cx = 0;
  for (const GateOp& op : c.ops) cx += op.kind == GateKind::kCx;
  EXPECT_EQ(cx, 4);
  VariationalModel m = VariationalModel::create(3, 2, 2, {"a", "b"}, 0);
  EXPECT_EQ(m.theta.size(), 12);
  EXPECT_THROW(VariationalModel::create(3, 1, 3, {"a", "b"}, 0), Error);
  EXPECT_THROW(VariationalModel::create(3, 1, 0, {"a"}, 0), Error);
}

TEST(Train, SeparableToyReachesFullAccuracy) {
  TrainConfig cfg;
  cfg.epochs = 50;
  TrainResult r = train(toy_model(), toy_set(), cfg);
  EXPECT_EQ(accuracy(r.model.classifier(), toy_set()), 1.0);
  ASSERT_EQ(r.loss_curve.size(), 51u);
  EXPECT_LT(r.loss_curve.back(), r.loss_curve.front());
}

TEST(Train, ZeroEpochsLeavesModelUnchanged) {
  TrainConfig cfg;
  cfg.epochs = 0;
  VariationalModel m = toy_model();
  TrainResult r = train(m, toy_set(), cfg);
  EXPECT_EQ(r.model.theta, m.theta);
}

TEST(Train, DeterministicTrajectories) {
  TrainConfig cfg;
  cfg.epochs = 10;
  cfg.batch = 4;
  cfg.seed = 12;
  TrainResult a = train(toy_model(), toy_set(), cfg);
  cfg.jobs = 3;
  TrainResult b = train(toy_model(), toy_set(), cfg);
  EXPECT_EQ(a.model.theta, b.model.theta);
  EXPECT_EQ(a.loss_curve, b.loss_curve);
}

TEST(Train, AdversarialWithoutWitnessesMatchesClean) {
  // Density items cannot be attacked, so the adversarial phase finds nothing.
  LabeledDataset data;
  data.n_qubits = 1;
  for (const DatasetItem& item : toy_set().items) {
    data.items.push_back(DatasetItem::density(item.state, item.label));
  }
  TrainConfig clean;
  clean.epochs = 15;
  TrainConfig adv = clean;
  adv.adversarial = true;
  TrainResult a = train(toy_model(), data, clean);
  TrainResult b = train(toy_model(), data, adv);
  EXPECT_FALSE(b.adversarial_phase_ran);
  EXPECT_TRUE(b.adversarial_examples.empty());
  EXPECT_EQ(a.model.theta, b.model.theta);
  EXPECT_EQ(a.loss_curve, b.loss_curve);
}

TEST(Train, AdversarialPhaseAddsTrueLabels) {
  TrainConfig cfg;
  cfg.epochs = 20;
  cfg.adversarial = true;
  cfg.attack.strategy = AttackStrategy::kFgsm;
  TrainResult r = train(toy_model(), toy_set(), cfg);
  ASSERT_TRUE(r.adversarial_phase_ran);
  ASSERT_FALSE(r.adversarial_examples.empty());
  EXPECT_EQ(r.loss_curve.size(), 42u);
  for (const DatasetItem& ex : r.adversarial_examples) {
    EXPECT_TRUE(ex.label == "pos" || ex.label == "neg");
    EXPECT_EQ(ex.kind, ItemKind::kFeatures);
  }
}

TEST(Train, ConfigValidation) {
  TrainConfig cfg;
  cfg.learning_rate = 0.0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.learning_rate = INFINITY;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.learning_rate = 0.1;
  cfg.epochs = -1;
  EXPECT_THROW(cfg.validate(), Error);
  LabeledDataset empty;
  empty.n_qubits = 1;
  EXPECT_THROW(train(toy_model(), empty, TrainConfig{}), Error);
}

TEST(Lcei, LabelsFollowThreshold) {
  LabeledDataset data = generate_lcei(3, 200, 0.0, M_PI / 2, 5);
  ASSERT_EQ(data.size(), 200);
  double smallest = 1.0;
  for (const DatasetItem& item : data.items) {
    const double alpha = item.input->features(0);
    smallest = std::min(smallest, alpha);
    EXPECT_EQ(item.label, std::abs(alpha) > kLceiThreshold ? "excited" : "non-excited");
  }
  EXPECT_LT(smallest, 0.05);
}

TEST(Lcei, ZeroAngleIsNonExcited) {
  LabeledDataset data = generate_lcei(2, 2, -0.0, 1.0, 0, 0.5);
  EXPECT_EQ(data.items[0].label, "non-excited");
  // At alpha = 0 the state is the linear cluster state.
  RVector zero(1);
  zero(0) = 0.0;
  EncodedInput in = encode_circuit(zero, lcei_template(2));
  CVector plus_cz(4);
  plus_cz << 0.5, 0.5, 0.5, -0.5;
  EXPECT_NEAR(std::abs(plus_cz.dot(in.state.matrix() * plus_cz)), 1.0, 1e-12);
}

TEST(Lcei, ValidStatesAndDeterminism) {
  LabeledDataset a = generate_lcei(3, 20, 0.0, M_PI / 2, 9);
  LabeledDataset b = generate_lcei(3, 20, 0.0, M_PI / 2, 9);
  ASSERT_EQ(a.size(), 20);
  for (int i = 0; i < a.size(); ++i) {
    const CMatrix& m = a.items[i].state.matrix();
    EXPECT_EQ(m.rows(), 8);
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR((m * m).trace().real(), 1.0, 1e-12);
    EXPECT_EQ(m, b.items[i].state.matrix());
    EXPECT_EQ(a.items[i].label, b.items[i].label);
  }
}

TEST(Lcei, Preconditions) {
  EXPECT_THROW(generate_lcei(1, 4, 0.0, 1.0, 0), Error);
  EXPECT_THROW(generate_lcei(7, 4, 0.0, 1.0, 0), Error);
  EXPECT_THROW(generate_lcei(3, 4, 0.0, 0.5, 0), Error);
}

TEST(Synthetic, LabelIsSignOfLastFeature) {
  LabeledDataset data = generate_synthetic(3, 50, 2);
  for (const DatasetItem& item : data.items) {
    const RVector& x = item.input->features;
    EXPECT_GE(std::abs(x(2)), 0.15);
    EXPECT_LE(std::abs(x(0)), M_PI / 3);
    EXPECT_EQ(item.label, x(2) > 0 ? "1" : "0");
  }
}

TEST(CriticalSamples, Examples) {
  std::vector<double> rlb{0.5, 0.1, 0.3, 0.05, 0.2, 0.4, 0.6, 0.7, 0.8, 0.9};
  EXPECT_EQ(critical_samples(rlb, 0.2), (std::vector<int>{3, 1}));
  EXPECT_TRUE(critical_samples(rlb, 0.0).empty());
  std::vector<double> flat(10, 0.25);
  EXPECT_EQ(critical_samples(flat, 0.3), (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(critical_samples(rlb, 1.5), Error);
}

TEST(CriticalSamples, FromReport) {
  VerificationReport report;
  for (int i = 0; i < 5; ++i) {
    ItemReport item;
    item.index = i;
    item.rlb = 0.1 * (5 - i);
    report.items.push_back(item);
  }
  EXPECT_EQ(critical_samples(report, 0.4), (std::vector<int>{4, 3}));
}

}  // namespace
}  // namespace qrover
