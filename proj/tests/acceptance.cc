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


// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "qrover/attack.h"
#include "qrover/benchmark.h"
#include "qrover/bounds.h"
#include "qrover/cli.h"
#include "qrover/error.h"
#include "qrover/io.h"
#include "qrover/verify.h"
#include "test_util.h"

namespace fs = std::filesystem;
using namespace qrover;
using qrover::testing::random_circuit;
using qrover::testing::random_povm;
using qrover::testing::random_state;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

Classifier random_classifier(int n, std::mt19937_64& rng, int outcomes) {
  Circuit c = random_circuit(n, 4 + static_cast<int>(rng() % 6), rng, true);
  NoiseSpec noise;
  noise.kind = static_cast<NoiseKind>(rng() % 3);
  noise.p = std::uniform_real_distribution<double>(0.0, 0.1)(rng);
  return Classifier::from_circuit(c, random_povm(1 << n, outcomes, rng), noise);
}

Outcome sandwich() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> feature(-M_PI, M_PI);
  int checked = 0, attacked = 0, violations = 0;
  double worst = 0.0;
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 2;
    Classifier a = random_classifier(n, rng, 2 + static_cast<int>(rng() % 2));
    for (int s = 0; s < 6; ++s) {
      RVector x(n);
      for (int i = 0; i < n; ++i) x(i) = feature(rng);
      EncodedInput in = encode_angle(x, n);
      const double rlb = robustness_lower_bound(outcome_distribution(a, in.state));
      OptimalRadius opt = optimal_radius(a, in.state);
      AttackConfig cfg;
      cfg.seed = rng();
      AttackResult att = run_attack(a, in, cfg);
      ++checked;
      if (!opt.eps_star.is_infinite()) {
        worst = std::max(worst, rlb - opt.eps_star.value());
        if (rlb > opt.eps_star.value() + 1e-6) ++violations;
      }
      if (att.success) {
        ++attacked;
        if (opt.eps_star.is_infinite()) {
          ++violations;
        } else {
          worst = std::max(worst, opt.eps_star.value() - *att.rub);
          if (opt.eps_star.value() > *att.rub + 1e-6) ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " states on 60 classifiers, " +
                               std::to_string(attacked) + " attacked, " +
                               std::to_string(violations) + " violations, worst slack " +
                               fmt("%.2e", worst)};
}

// Brute-force minimum of 1 - F over misclassified Bloch vectors.
class BlochOracle {
 public:
  BlochOracle(const Classifier& a, const CMatrix& rho, int top) {
    s_ = bloch(rho);
    for (int c = 0; c < a.povm.size(); ++c) {
      if (c == top) continue;
      CMatrix m = a.channel.kraus.adjoint_apply(a.povm.elements[top] - a.povm.elements[c]);
      Eigen::Vector4d h;
      h << m.trace().real(), (m * pauli::X()).trace().real(),
          (m * pauli::Y()).trace().real(), (m * pauli::Z()).trace().real();
      halfspaces_.push_back(h);
    }
  }

  double solve(long& feasible_points) {
    // Uniform grid on a box that shrinks to the feasible region until it holds
    // enough feasible points.
    Eigen::Vector3d lo = -Eigen::Vector3d::Ones(), hi = Eigen::Vector3d::Ones();
    double step = 0.0;
    for (int pass = 0; pass < 12; ++pass) {
      Eigen::Vector3d flo, fhi;
      step = (hi - lo).maxCoeff() / (200.0 + 100.0 * pass);
      feasible_points = box(lo, hi, step, flo, fhi);
      if (feasible_points >= 1000000 || feasible_points == 0) break;
      lo = (flo.array() - step).max(-1.0);
      hi = (fhi.array() + step).min(1.0);
    }
    Eigen::Vector3d center = best_r_;
    double half = 2.0 * step;
    for (int round = 0; round < 6; ++round) {
      cube(center, half, 41);
      center = best_r_;
      half /= 10.0;
    }
    sphere(0.0, M_PI, 0.0, 2 * M_PI, 1000);
    Eigen::Vector3d on_sphere = best_sphere_;
    double dt = M_PI / 999, dp = 2 * M_PI / 999;
    for (int round = 0; round < 6; ++round) {
      const double t = std::acos(std::clamp(on_sphere(2), -1.0, 1.0));
      const double p = std::atan2(on_sphere(1), on_sphere(0));
      sphere(t - 2 * dt, t + 2 * dt, p - 2 * dp, p + 2 * dp, 101);
      on_sphere = best_sphere_;
      dt /= 25;
      dp /= 25;
    }
    return best_;
  }

 private:
  static Eigen::Vector3d bloch(const CMatrix& m) {
    return {(m * pauli::X()).trace().real(), (m * pauli::Y()).trace().real(),
            (m * pauli::Z()).trace().real()};
  }

  bool feasible(const Eigen::Vector3d& r) const {
    for (const auto& h : halfspaces_) {
      if (h(0) + h.tail<3>().dot(r) <= 0.0) return true;
    }
    return false;
  }

  double infidelity(const Eigen::Vector3d& r) const {
    const double det = std::max(0.0, 1.0 - r.squaredNorm()) * std::max(0.0, 1.0 - s_.squaredNorm());
    return 1.0 - 0.5 * (1.0 + r.dot(s_) + std::sqrt(det));
  }

  void consider(const Eigen::Vector3d& r, bool surface) {
    if (!feasible(r)) return;
    const double v = infidelity(r);
    if (v < best_) {
      best_ = v;
      best_r_ = r;
    }
    if (surface && v < best_sphere_value_) {
      best_sphere_value_ = v;
      best_sphere_ = r;
    }
  }

  long box(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi, double step,
           Eigen::Vector3d& flo, Eigen::Vector3d& fhi) {
    long count = 0;
    flo = Eigen::Vector3d::Constant(INFINITY);
    fhi = Eigen::Vector3d::Constant(-INFINITY);
    const Eigen::Array3i n = ((hi - lo) / step).array().floor().cast<int>() + 1;
    for (int i = 0; i < n(0); ++i) {
      for (int j = 0; j < n(1); ++j) {
        for (int k = 0; k < n(2); ++k) {
          Eigen::Vector3d r = lo + step * Eigen::Vector3d(i, j, k);
          if (r.squaredNorm() > 1.0 || !feasible(r)) continue;
          ++count;
          flo = flo.cwiseMin(r);
          fhi = fhi.cwiseMax(r);
          consider(r, false);
        }
      }
    }
    return count;
  }

  void cube(const Eigen::Vector3d& center, double half, int g) {
    const double step = 2.0 * half / (g - 1);
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) {
        for (int k = 0; k < g; ++k) {
          Eigen::Vector3d r = center + Eigen::Vector3d(-half + i * step, -half + j * step,
                                                       -half + k * step);
          if (r.squaredNorm() <= 1.0) consider(r, false);
        }
      }
    }
  }

  void sphere(double t0, double t1, double p0, double p1, int g) {
    for (int i = 0; i < g; ++i) {
      const double t = t0 + (t1 - t0) * i / (g - 1);
      for (int j = 0; j < g; ++j) {
        const double p = p0 + (p1 - p0) * j / (g - 1);
        consider({std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)}, true);
      }
    }
  }

  Eigen::Vector3d s_;
  std::vector<Eigen::Vector4d> halfspaces_;
  double best_ = INFINITY;
  Eigen::Vector3d best_r_ = Eigen::Vector3d::Zero();
  double best_sphere_value_ = INFINITY;
  Eigen::Vector3d best_sphere_ = Eigen::Vector3d(0, 0, 1);
};

Outcome sdp_vs_oracle() {
  std::mt19937_64 rng(202);
  int finite = 0, infinite = 0, mismatches = 0;
  long min_points = -1;
  double worst = 0.0;
  while (finite < 24) {
    Classifier a = random_classifier(1, rng, 2 + static_cast<int>(rng() % 2));
    DensityMatrix rho = random_state(2, rng, 1 + static_cast<int>(rng() % 2));
    OptimalRadius opt = optimal_radius(a, rho);
    BlochOracle oracle(a, rho.matrix(), opt.predicted_label);
    long points = 0;
    const double grid = oracle.solve(points);
    if (opt.eps_star.is_infinite() || std::isinf(grid)) {
      ++infinite;
      if (opt.eps_star.is_infinite() != std::isinf(grid)) ++mismatches;
      continue;
    }
    ++finite;
    min_points = min_points < 0 ? points : std::min(min_points, points);
    const double err = std::abs(opt.eps_star.value() - grid);
    worst = std::max(worst, err);
    if (err > 1e-3) ++mismatches;
  }
  return {mismatches == 0 && min_points >= 1000000,
          std::to_string(finite) + " finite and " + std::to_string(infinite) +
              " unreachable instances, max |sdp - grid| " + fmt("%.2e", worst) +
              ", min feasible grid points " + std::to_string(min_points)};
}

CMatrix rotate(const CMatrix& rho, const CMatrix& h, double s) {
  HermitianEig e = hermitian_eig(h);
  CVector phase(e.values.size());
  for (int i = 0; i < e.values.size(); ++i) phase(i) = std::polar(1.0, s * e.values(i));
  CMatrix v = e.vectors * phase.asDiagonal() * e.vectors.adjoint();
  return v * rho * v.adjoint();
}

Outcome certification() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int instances = 0, counterexamples = 0;
  long sampled = 0;
  while (instances < 20) {
    const int n = 1 + instances % 2;
    const int dim = 1 << n;
    Classifier a = random_classifier(n, rng, 2 + static_cast<int>(rng() % 2));
    DensityMatrix rho = random_state(dim, rng, 1 + static_cast<int>(rng() % dim));
    std::vector<double> dist = outcome_distribution(a, rho);
    const double rlb = robustness_lower_bound(dist);
    if (rlb < 1e-4) continue;
    ++instances;
    const int label = argmax_label(dist);
    auto distance = [&](const CMatrix& m) {
      return 1.0 - fidelity(rho, DensityMatrix::project(m));
    };
    int accepted = 0;
    while (accepted < 10000) {
      CMatrix sigma;
      if (accepted % 2 == 0) {
        // Mixture toward a random state; infidelity is monotone along the segment.
        const CMatrix tau = random_state(dim, rng, 1 + static_cast<int>(rng() % dim)).matrix();
        auto at = [&](double t) { return ((1 - t) * rho.matrix() + t * tau).eval(); };
        double lo = 0.0, hi = 1.0;
        if (distance(at(hi)) > rlb) {
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (distance(at(mid)) <= rlb ? lo : hi) = mid;
          }
        } else {
          lo = 1.0;
        }
        sigma = at(accepted % 10 == 0 ? lo : lo * u(rng));
      } else {
        const CMatrix g = qrover::testing::ginibre(dim, dim, rng);
        const CMatrix h = 0.5 * (g + g.adjoint());
        sigma = rotate(rho.matrix(), h, 0.5 * std::sqrt(rlb) * u(rng));
      }
      if (distance(sigma) > rlb) continue;
      ++accepted;
      if (classify(a, DensityMatrix::project(sigma)) != label) ++counterexamples;
    }
    sampled += accepted;
  }
  return {counterexamples == 0, std::to_string(sampled) + " states over 20 instances, " +
                                    std::to_string(counterexamples) + " counterexamples"};
}

struct RandomDataset {
  Classifier a;
  LabeledDataset data;
  double eps = 0.0;
};

RandomDataset random_dataset(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 2);
  RandomDataset out{random_classifier(n, rng, 2 + static_cast<int>(rng() % 2)), {}, 0.0};
  out.data.n_qubits = n;
  for (int i = 0; i < 20; ++i) {
    DensityMatrix rho = random_state(1 << n, rng, 1 + static_cast<int>(rng() % (1 << n)));
    int label = classify(out.a, rho);
    if (rng() % 5 == 0) label = static_cast<int>(rng() % out.a.povm.size());
    out.data.items.push_back(DatasetItem::density(rho, out.a.povm.labels[label]));
  }
  out.eps = std::uniform_real_distribution<double>(0.002, 0.12)(rng);
  return out;
}

Outcome mixed_vs_exact() {
  std::mt19937_64 rng(404);
  int mismatched = 0, bad_counts = 0, total_calls = 0;
  for (int d = 0; d < 20; ++d) {
    RandomDataset r = random_dataset(rng);
    VerificationReport mixed = verify_dataset(r.a, r.eps, r.data, Method::kMixed);
    VerificationReport exact = verify_dataset(r.a, r.eps, r.data, Method::kExact);
    bool same = mixed.items.size() == exact.items.size();
    int expected_calls = 0;
    for (std::size_t i = 0; same && i < mixed.items.size(); ++i) {
      const ItemReport& m = mixed.items[i];
      const ItemReport& e = exact.items[i];
      same = m.verdict == e.verdict && m.witness_ref == e.witness_ref;
      if (m.verdict != Verdict::kSkippedMisclassified && m.rlb < r.eps) ++expected_calls;
    }
    if (!same) ++mismatched;
    if (mixed.sdp_calls != expected_calls) ++bad_counts;
    total_calls += mixed.sdp_calls;
  }
  return {mismatched == 0 && bad_counts == 0,
          "20 datasets of 20 items, " + std::to_string(mismatched) + " verdict mismatches, " +
              std::to_string(bad_counts) + " wrong SDP-call counts, " +
              std::to_string(total_calls) + " mixed SDP calls"};
}

Outcome ura_vs_ra() {
  std::mt19937_64 rng(505);
  int tested = 0, violations = 0, equal_checks = 0;
  for (int d = 0; d < 40; ++d) {
    RandomDataset r = random_dataset(rng);
    VerificationReport rep = verify_dataset(r.a, r.eps, r.data, Method::kExact);
    if (!rep.robust_accuracy) continue;
    ++tested;
    if (*rep.under_robust_accuracy > *rep.robust_accuracy + 1e-12) ++violations;
    double min_rlb = INFINITY;
    for (const ItemReport& it : rep.items) {
      if (it.verdict != Verdict::kSkippedMisclassified) min_rlb = std::min(min_rlb, it.rlb);
    }
    for (double eps : {0.5 * min_rlb, min_rlb}) {
      if (!(eps > 0.0 && eps < 1.0)) continue;
      VerificationReport small = verify_dataset(r.a, eps, r.data, Method::kExact);
      ++equal_checks;
      if (*small.under_robust_accuracy != *small.robust_accuracy) ++violations;
    }
  }
  return {violations == 0, std::to_string(tested) + " datasets, " +
                               std::to_string(equal_checks) + " checks at eps <= min rlb, " +
                               std::to_string(violations) + " violations"};
}

Outcome closed_forms() {
  const double r1 = robustness_lower_bound(std::vector<double>{1.0, 0.0});
  const double r2 = robustness_lower_bound(std::vector<double>{0.9, 0.1});
  Classifier z = Classifier::from_kraus(KrausChannel::identity(2), Povm::z_basis(1, 0));
  const double e1 = optimal_radius(z, DensityMatrix::basis(2, 0)).eps_star.value();
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.9;
  d(1, 1) = 0.1;
  const double e2 = optimal_radius(z, DensityMatrix(d)).eps_star.value();
  const bool ok = std::abs(r1 - 0.5) <= 1e-12 && std::abs(r2 - 0.2) <= 1e-12 &&
                  std::abs(e1 - 0.5) <= 1e-6 && std::abs(e2 - 0.2) <= 1e-6;
  return {ok, "RLB " + fmt("%.15g", r1) + " " + fmt("%.15g", r2) + ", eps* " +
                  fmt("%.9g", e1) + " " + fmt("%.9g", e2)};
}

Outcome gradients() {
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  double worst = 0.0;
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    Circuit c = random_circuit(n, 6, rng, t % 2 == 0);
    Classifier a = Classifier::from_circuit(c, random_povm(1 << n, 2, rng));
    RVector x(n * (1 + t % 2));
    for (int i = 0; i < x.size(); ++i) x(i) = angle(rng);
    EncodedInput in = encode_angle(x, n);
    const int label = argmax_label(outcome_distribution(a, in.state));
    LossSpec loss = LossSpec::cross_entropy(label);
    RVector g = parameter_shift_gradient(a, in, loss).gradient;
    const double h = 1e-5;
    for (int i = 0; i < x.size(); ++i) {
      RVector up = x, down = x;
      up(i) += h;
      down(i) -= h;
      const double fd = (loss.value(outcome_distribution(a, encode_angle(up, n).state)) -
                         loss.value(outcome_distribution(a, encode_angle(down, n).state))) /
                        (2 * h);
      worst = std::max(worst, std::abs(fd - g(i)));
      if (std::abs(fd - g(i)) > 1e-4) ++bad;
    }
  }
  return {bad == 0, "100 pairs, max |ps - fd| " + fmt("%.2e", worst)};
}

Outcome benchmark_property() {
  bool ok = true;
  std::string detail;
  for (const char* task : {"lcei", "synthetic"}) {
    BenchmarkResult r = run_benchmark(default_benchmark(task, 3, 0));
    int sandwiched = 0;
    for (const BenchmarkRow& row : r.rows) {
      if (row.before.rub && *row.before.rub >= row.before.rlb) ++sandwiched;
    }
    const bool task_ok = static_cast<int>(r.rows.size()) == 10 && sandwiched == 10 &&
                         r.improvement_ratio > 1.0;
    ok = ok && task_ok;
    if (!detail.empty()) detail += "; ";
    detail += std::string(task) + " rub>=rlb " + std::to_string(sandwiched) + "/" +
              std::to_string(r.rows.size()) + ", critical rlb " +
              fmt("%.4g", r.critical_rlb_before) + " -> " + fmt("%.4g", r.critical_rlb_after) +
              ", ratio " + fmt("%.4g", r.improvement_ratio) + " (hardware reference " +
              (std::string(task) == "lcei" ? "4.74" : "4.22") + ")";
  }
  return {ok, detail};
}

Outcome parser() {
  std::vector<std::string> corpus;
  for (const auto& entry : fs::directory_iterator(fs::path(QROVER_FIXTURE_DIR) / "qasm")) {
    if (entry.path().extension() == ".qasm") corpus.push_back(io::read_file(entry.path()));
  }
  std::sort(corpus.begin(), corpus.end());
  int round_trip_failures = 0;
  for (const std::string& text : corpus) {
    try {
      Circuit c = parse_qasm(text);
      const std::string canonical = emit_qasm(c);
      Circuit again = parse_qasm(canonical);
      if (!(again == c) || emit_qasm(again) != canonical) ++round_trip_failures;
    } catch (const Error&) {
      ++round_trip_failures;
    }
  }
  std::mt19937_64 rng(909);
  int other_errors = 0, parsed = 0;
  const std::string alphabet = "OPENQASM2.0;include\"qelib1.inc\"qreg q[]creg c[] h x cx rz(pi/2) ->,{}\n ";
  for (int i = 0; i < 100000; ++i) {
    std::string input;
    if (i % 3 == 0) {
      input.resize(rng() % 200);
      for (char& ch : input) ch = static_cast<char>(rng() % 256);
    } else if (i % 3 == 1) {
      input = corpus[rng() % corpus.size()];
      const int edits = 1 + static_cast<int>(rng() % 6);
      for (int e = 0; e < edits && !input.empty(); ++e) {
        const std::size_t pos = rng() % input.size();
        switch (rng() % 3) {
          case 0: input[pos] = static_cast<char>(rng() % 256); break;
          case 1: input.erase(pos, 1 + rng() % 8); break;
          default: input.insert(pos, 1, alphabet[rng() % alphabet.size()]);
        }
      }
    } else {
      input.resize(rng() % 120);
      for (char& ch : input) ch = alphabet[rng() % alphabet.size()];
    }
    try {
      parse_qasm(input);
      ++parsed;
    } catch (const ParseError&) {
    } catch (...) {
      ++other_errors;
    }
  }
  return {round_trip_failures == 0 && corpus.size() >= 10 && other_errors == 0,
          std::to_string(corpus.size()) + " corpus files, " +
              std::to_string(round_trip_failures) + " round-trip failures; 100000 fuzz inputs, " +
              std::to_string(parsed) + " parsed, " + std::to_string(other_errors) +
              " non-parse errors"};
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

// Concatenated bytes of every regular file under dir, keyed by relative path.
std::string snapshot(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), dir));
  }
  std::sort(files.begin(), files.end());
  std::string all;
  for (const fs::path& f : files) all += f.string() + "\n" + io::read_file(dir / f) + "\n";
  return all;
}

Outcome determinism() {
  const fs::path root =
      fs::temp_directory_path() / ("qrover_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);
  const std::string data = (root / "data.json").string();
  cli({"gen-data", "--task", "synthetic", "--n-qubits", "2", "--samples", "16", "--seed", "5",
       "--out", data});
  std::vector<std::string> snapshots;
  int runs = 0;
  for (const std::string jobs : {"1", "1", "4"}) {
    const fs::path dir = root / ("run" + std::to_string(runs++));
    fs::create_directories(dir);
    const std::string model = (dir / "model.json").string();
    cli({"train", "--dataset", data, "--epochs", "6", "--adversarial", "--jobs", jobs, "--out",
         model});
    cli({"verify", "--model", model, "--dataset", data, "--epsilon", "0.05", "--method",
         "mixed", "--jobs", jobs, "--out", (dir / "report.json").string()});
    cli({"attack", "--model", model, "--dataset", data, "--seed", "9", "--jobs", jobs, "--out",
         (dir / "attack.json").string()});
    cli({"benchmark", "--task", "lcei", "--n-qubits", "3", "--samples", "6", "--seed", "2",
         "--jobs", jobs, "--out", (dir / "bench").string()});
    snapshots.push_back(snapshot(dir));
  }
  fs::remove_all(root);
  const bool same = snapshots[0] == snapshots[1] && snapshots[1] == snapshots[2];
  return {same && snapshots[0].find("verification_report") != std::string::npos,
          "train, verify, attack and benchmark outputs across 2 runs with --jobs 1 and 1 run "
          "with --jobs 4: " +
              std::string(same ? "byte-identical" : "differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sandwich soundness", sandwich},
      {"SDP vs grid oracle", sdp_vs_oracle},
      {"certification soundness", certification},
      {"mixed vs exact", mixed_vs_exact},
      {"URA <= RA", ura_vs_ra},
      {"closed forms", closed_forms},
      {"parameter-shift gradients", gradients},
      {"benchmark procedure", benchmark_property},
      {"parser round trip and fuzz", parser},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s: %s (%s; %.1fs)\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
