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

#include "qrover/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrover/error.h"

namespace qrover {

double Radius::value() const {
  if (infinite_) throw Error(ErrorCode::kOutOfRange, "radius is infinite");
  return value_;
}

double robustness_lower_bound(std::span<const double> dist) {
  if (dist.size() < 2) {
    throw Error(ErrorCode::kTooFewClasses, "need at least two outcomes");
  }
  double total = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kDistributionInvalid, "probability outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > default_tolerances().distribution) {
    throw Error(ErrorCode::kDistributionInvalid, "probabilities do not sum to 1");
  }
  std::vector<double> copy(dist.begin(), dist.end());
  const int top = argmax_label(copy);
  const double root_top = std::sqrt(dist[top]);
  double best = INFINITY;
  for (std::size_t c = 0; c < dist.size(); ++c) {
    if (static_cast<int>(c) == top) continue;
    double d = root_top - std::sqrt(dist[c]);
    best = std::min(best, 0.5 * d * d);
  }
  return best;
}

namespace {

// Hermitian k x k basis used for the sigma block: sigma = base + sum y_i B_i.
// The last diagonal entry absorbs the unit-trace constraint.
struct SigmaBasis {
  std::vector<CMatrix> elements;
  CMatrix base;
};

SigmaBasis sigma_basis(int k) {
  SigmaBasis out;
  out.base = CMatrix::Zero(k, k);
  out.base(k - 1, k - 1) = 1.0;
  for (int j = 0; j + 1 < k; ++j) {
    CMatrix e = CMatrix::Zero(k, k);
    e(j, j) = 1.0;
    e(k - 1, k - 1) = -1.0;
    out.elements.push_back(e);
  }
  for (int j = 0; j < k; ++j) {
    for (int l = j + 1; l < k; ++l) {
      CMatrix re = CMatrix::Zero(k, k);
      re(j, l) = re(l, j) = 1.0;
      out.elements.push_back(re);
      CMatrix im = CMatrix::Zero(k, k);
      im(j, l) = Complex(0.0, 1.0);
      im(l, j) = Complex(0.0, -1.0);
      out.elements.push_back(im);
    }
  }
  return out;
}

// Appends -R(h) to `entries`, where h is a Hermitian matrix placed at
// (offset, offset) inside an s x s complex block and R is the real embedding
// [[Re, -Im], [Im, Re]].
void append_embedded(const CMatrix& h, int offset, int s,
                     std::vector<SdpProblem::Entry>& entries, double sign) {
  const int n = static_cast<int>(h.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double re = h(i, j).real();
      const double im = h(i, j).imag();
      const int r = offset + i;
      const int c = offset + j;
      if (re != 0.0) {
        entries.push_back({0, r, c, sign * re});
        entries.push_back({0, s + r, s + c, sign * re});
      }
      if (i != j && im != 0.0) {
        // Top-right block holds -Im(h): (r, s + c) = -im, (c, s + r) = +im.
        entries.push_back({0, r, s + c, -sign * im});
        entries.push_back({0, c, s + r, sign * im});
      }
    }
  }
}

Eigen::MatrixXd embed(const CMatrix& h) {
  const long n = h.rows();
  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

}  // namespace

HalfspaceOptimum max_fidelity_halfspace(const DensityMatrix& rho,
                                        const CMatrix& a,
                                        const SdpSettings& settings) {
  const int dim = rho.dim();
  if (a.rows() != dim || a.cols() != dim) {
    throw Error(ErrorCode::kDimMismatch, "constraint does not match state");
  }
  HalfspaceOptimum out;
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0 || (a * rho.matrix()).trace().real() <= 0.0) {
    out.feasible = true;
    out.fidelity = 1.0;
    out.sigma = rho;
    return out;
  }
  HermitianEig a_eig = hermitian_eig(a / scale, 1e-8);
  const double feas = settings.feasibility_tolerance;
  if (a_eig.values(dim - 1) > feas) {
    out.feasible = false;
    return out;
  }
  out.feasible = true;

  // Face reduction: when A is PSD up to tolerance, Tr[A sigma] <= 0 confines
  // sigma to the near-kernel of A and the linear constraint disappears.
  const bool on_face = a_eig.values(dim - 1) >= -feas;
  CMatrix w;
  if (on_face) {
    int k = 0;
    while (k < dim && a_eig.values(dim - 1 - k) <= feas) ++k;
    w = a_eig.vectors.rightCols(k);
  } else {
    w = CMatrix::Identity(dim, dim);
  }
  const int k = static_cast<int>(w.cols());

  HermitianEig rho_eig = hermitian_eig(rho.matrix());
  int r = 0;
  while (r < dim && rho_eig.values(r) > 1e-10) ++r;
  const CMatrix v = rho_eig.vectors.leftCols(r);
  const RVector d = rho_eig.values.head(r);
  const CMatrix overlap = w.adjoint() * v;  // k x r

  const int s = r + k;
  SigmaBasis basis = sigma_basis(k);
  SdpProblem problem;
  problem.block_sizes = {2 * s};
  CMatrix h0 = CMatrix::Zero(s, s);
  h0.topLeftCorner(r, r) = d.cast<Complex>().asDiagonal();
  h0.bottomRightCorner(k, k) = basis.base;
  problem.c = {embed(h0)};

  const int n_sigma = static_cast<int>(basis.elements.size());
  const int m = n_sigma + 2 * r * k;
  problem.b = Eigen::VectorXd::Zero(m);
  problem.a.resize(m);
  for (int i = 0; i < n_sigma; ++i) {
    append_embedded(basis.elements[i], r, s, problem.a[i], -1.0);
  }
  int idx = n_sigma;
  for (int p = 0; p < r; ++p) {
    for (int q = 0; q < k; ++q) {
      // Y(p, q) sits at block position (p, r + q); its real and imaginary
      // parts are separate variables.
      CMatrix re = CMatrix::Zero(s, s);
      re(p, r + q) = re(r + q, p) = 1.0;
      problem.a[idx].clear();
      append_embedded(re, 0, s, problem.a[idx], -1.0);
      problem.b(idx) = overlap(q, p).real();
      ++idx;
      CMatrix im = CMatrix::Zero(s, s);
      im(p, r + q) = Complex(0.0, 1.0);
      im(r + q, p) = Complex(0.0, -1.0);
      append_embedded(im, 0, s, problem.a[idx], -1.0);
      problem.b(idx) = -overlap(q, p).imag();
      ++idx;
    }
  }
  if (!on_face) {
    const CMatrix a_w = w.adjoint() * (a / scale) * w;
    problem.c_lp = Eigen::VectorXd::Constant(1, -(a_w * basis.base).trace().real());
    problem.a_lp = Eigen::MatrixXd::Zero(1, m);
    for (int i = 0; i < n_sigma; ++i) {
      problem.a_lp(0, i) = (a_w * basis.elements[i]).trace().real();
    }
  } else {
    problem.c_lp = Eigen::VectorXd();
    problem.a_lp = Eigen::MatrixXd();
  }

  SdpOptions options;
  options.tolerance = settings.tolerance;
  options.max_iterations = settings.max_iterations;
  SdpResult result = solve_sdp(problem, options);
  out.solver_called = true;
  out.status = result.status;
  out.iterations = result.iterations;
  if (!result.ok()) {
    throw Error(ErrorCode::kSolverFailure,
                std::string(sdp_status_name(result.status)) + " after " +
                    std::to_string(result.iterations) + " iterations");
  }
  CMatrix tau = basis.base;
  for (int i = 0; i < n_sigma; ++i) tau += result.y(i) * basis.elements[i];
  out.sigma = DensityMatrix::project(w * tau * w.adjoint());
  const double root = std::clamp(result.dual_objective, 0.0, 1.0);
  out.fidelity = root * root;
  return out;
}

OptimalRadius optimal_radius(const Classifier& a, const DensityMatrix& rho,
                             const SdpSettings& settings) {
  std::vector<double> dist = outcome_distribution(a, rho);
  OptimalRadius out;
  out.predicted_label = argmax_label(dist);
  const int n_labels = a.povm.size();
  out.per_label.assign(n_labels, Radius::infinite());
  const CMatrix& top = a.povm.elements[out.predicted_label];
  for (int c = 0; c < n_labels; ++c) {
    if (c == out.predicted_label) continue;
    CMatrix constraint = a.channel.kraus.adjoint_apply(top - a.povm.elements[c]);
    constraint = hermitian_part(constraint);
    HalfspaceOptimum opt = max_fidelity_halfspace(rho, constraint, settings);
    if (opt.solver_called) ++out.sdp_solves;
    if (!opt.feasible) continue;
    Radius radius = Radius::finite(std::clamp(1.0 - opt.fidelity, 0.0, 1.0));
    out.per_label[c] = radius;
    if (radius < out.eps_star) {
      out.eps_star = radius;
      out.witness = opt.sigma;
      out.target_label = c;
    }
  }
  return out;
}

std::optional<double> RobustnessBounds::gap() const {
  if (!rub) return std::nullopt;
  return *rub - rlb;
}

RobustnessBounds assemble_bounds(double rlb, std::optional<Radius> optimal,
                                 std::optional<double> rub,
                                 std::optional<DensityMatrix> witness,
                                 std::optional<int> target_label, double tol) {
  auto violation = [](const std::string& msg) {
    throw Error(ErrorCode::kSandwichViolation, msg);
  };
  if (!(rlb >= 0.0)) violation("negative lower bound");
  if (optimal && !optimal->is_infinite() && rlb > optimal->value() + tol) {
    violation("lower bound " + format_real(rlb) + " exceeds optimum " +
              format_real(optimal->value()));
  }
  if (rub) {
    if (optimal && optimal->is_infinite()) {
      violation("attack succeeded where no adversarial state exists");
    }
    if (optimal && optimal->value() > *rub + tol) {
      violation("optimum exceeds upper bound");
    }
    if (rlb > *rub + tol) violation("lower bound exceeds upper bound");
  }
  return RobustnessBounds{rlb, optimal, rub, std::move(witness), target_label};
}

}  // namespace qrover
