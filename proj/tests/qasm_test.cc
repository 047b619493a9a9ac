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

#include "qrover/qasm.h"

#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "qrover/error.h"
#include "test_util.h"

namespace qrover {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FixtureCount {
  std::string file;
  int qubits;
  int ops;
  int measured;
};

std::vector<FixtureCount> load_counts() {
  std::ifstream in(std::string(QROVER_FIXTURE_DIR) + "/qasm/counts.txt");
  std::vector<FixtureCount> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    FixtureCount c;
    ss >> c.file >> c.qubits >> c.ops >> c.measured;
    out.push_back(c);
  }
  return out;
}

TEST(ParseQasm, MinimalProgram) {
  Circuit c = parse_qasm("OPENQASM 2.0; qreg q[1]; x q[0];");
  EXPECT_EQ(c.n_qubits, 1);
  ASSERT_EQ(c.ops.size(), 1u);
  EXPECT_EQ(c.ops[0].kind, GateKind::kX);
  EXPECT_EQ(c.ops[0].qubits, std::vector<int>{0});
}

TEST(ParseQasm, EvaluatesAngles) {
  Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrx(pi/2) q[0];");
  ASSERT_EQ(c.ops.size(), 1u);
  EXPECT_EQ(c.ops[0].kind, GateKind::kRx);
  EXPECT_DOUBLE_EQ(c.ops[0].params[0], M_PI / 2);
}

TEST(ParseQasm, RejectsDuplicateQubit) {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0], q[0];");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.col(), 4);
  }
}

TEST(ParseQasm, ErrorPositionsAndMessages) {
  struct Case {
    const char* src;
    int line;
    int col;
  };
  const Case cases[] = {
      {"OPENQASM 2.0;\nqreg q[1];\nfoo q[0];", 3, 1},
      {"OPENQASM 2.0;\nqreg q[1];\nrx q[0];", 3, 1},
      {"OPENQASM 2.0;\nqreg q[1];\nqreg r[1];", 3, 1},
      {"OPENQASM 2.0;\nqreg q[1];\nrx(pi/) q[0];", 3, 7},
      {"OPENQASM 2.0;\nqreg q[1];\nx q[1];", 3, 5},
      {"OPENQASM 3.0;", 1, 10},
      {"OPENQASM 2.0;\nx q[0];", 2, 1},
      {"OPENQASM 2.0;\nqreg q[2];\ncx q[0];", 3, 4},
      {"OPENQASM 2.0;\nqreg q[1];\ngate foo a { x a; }", 3, 1},
      {"OPENQASM 2.0;\nqreg q[1];\nrx(1/0) q[0];", 3, 1},
  };
  for (const Case& c : cases) {
    try {
      parse_qasm(c.src);
      ADD_FAILURE() << "accepted: " << c.src;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.src << " -> " << e.what();
      EXPECT_EQ(e.col(), c.col) << c.src << " -> " << e.what();
    }
  }
}

TEST(ParseQasm, FixtureCorpusCounts) {
  std::vector<FixtureCount> counts = load_counts();
  ASSERT_GE(counts.size(), 10u);
  for (const FixtureCount& fc : counts) {
    Circuit c = parse_qasm(read_file(std::string(QROVER_FIXTURE_DIR) + "/qasm/" + fc.file));
    EXPECT_EQ(c.n_qubits, fc.qubits) << fc.file;
    EXPECT_EQ(static_cast<int>(c.ops.size()), fc.ops) << fc.file;
    EXPECT_EQ(static_cast<int>(c.measured_qubits.size()), fc.measured) << fc.file;
    EXPECT_EQ(parse_qasm(emit_qasm(c)), c) << fc.file;
  }
}

TEST(ParseQasm, SlotAnnotations) {
  Circuit c = parse_qasm(read_file(std::string(QROVER_FIXTURE_DIR) + "/qasm/variational.qasm"));
  EXPECT_EQ(c.slot_count(), 6);
  EXPECT_EQ(c.ops[4].slot, 4);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nx q[0]; // @slot 1\n"),
               ParseError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrx(1) q[0]; // @slot 1\n"
                          "rx(1) q[0]; // @slot 1\n"),
               ParseError);
  // An ordinary comment is not an annotation.
  Circuit plain = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrx(1) q[0]; // slot 1\n");
  EXPECT_FALSE(plain.ops[0].slot.has_value());
}

TEST(EmitQasm, Examples) {
  Circuit empty;
  empty.n_qubits = 2;
  EXPECT_EQ(emit_qasm(empty), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
  Circuit one;
  one.n_qubits = 1;
  one.add(GateKind::kRx, {0}, {0.5});
  EXPECT_NE(emit_qasm(one).find("rx(0.5) q[0];"), std::string::npos);
}

TEST(EmitQasm, RandomRoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Circuit c = testing::random_circuit(n, 10, rng, true);
    if (trial % 3 == 0) c.measured_qubits = {0};
    int slot = 0;
    for (GateOp& op : c.ops) {
      if (is_rotation(op.kind) && rng() % 2) op.slot = slot++;
    }
    EXPECT_EQ(parse_qasm(emit_qasm(c)), c);
  }
}

TEST(ParseQasm, RandomBytesNeverCrash) {
  std::mt19937_64 rng(99);
  const std::string alphabet = "OPENQASM2.0;qreg[]cxrhypi()+-*/,->\n \"measure";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    int len = static_cast<int>(rng() % 80);
    for (int i = 0; i < len; ++i) {
      s.push_back(trial % 2 ? static_cast<char>(rng() % 256)
                            : alphabet[rng() % alphabet.size()]);
    }
    if (trial % 4 == 0) s = "OPENQASM 2.0; qreg q[2]; " + s;
    try {
      parse_qasm(s);
    } catch (const ParseError&) {
    }
  }
}

TEST(ParseQasm, DeepNestingIsAnErrorNotACrash) {
  std::string expr(100000, '(');
  EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[1]; rx(" + expr + ") q[0];"),
               ParseError);
}

}  // namespace
}  // namespace qrover
