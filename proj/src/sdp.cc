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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "qrover/error.h"

namespace qrover {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Blocks = std::vector<MatrixXd>;

// A_i as elementary (row, col, value) terms: A_i[row][col] += value.
struct Term {
  int block;
  int row;
  int col;
  double value;
};

class Solver {
 public:
  Solver(const SdpProblem& p, const SdpOptions& o) : p_(p), o_(o) {
    m_ = p.variables();
    lp_ = p.lp_size();
    validate();
    terms_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (const auto& e : p.a[i]) {
        terms_[i].push_back({e.block, e.row, e.col, e.value});
        if (e.row != e.col) terms_[i].push_back({e.block, e.col, e.row, e.value});
      }
    }
    n_total_ = lp_;
    for (int s : p.block_sizes) n_total_ += s;
  }

  SdpResult run() {
    initialize();
    SdpResult result;
    for (int iter = 0; iter <= o_.max_iterations; ++iter) {
      result.iterations = iter;
      measure(result);
      if (converged(result, o_.tolerance)) {
        result.status = SdpStatus::kOptimal;
        return finish(result);
      }
      if (iter == o_.max_iterations || stalled_ >= 3) break;
      if (!step()) {
        measure(result);
        break;
      }
      if (!std::isfinite(y_.norm()) || y_.norm() > 1e12) {
        result.status = SdpStatus::kNumericalError;
        return finish(result);
      }
    }
    measure(result);
    if (converged(result, o_.tolerance * o_.near_optimal_factor)) {
      result.status = SdpStatus::kNearOptimal;
    } else {
      result.status = stalled_ >= 3 ? SdpStatus::kNumericalError
                                    : SdpStatus::kMaxIterations;
    }
    return finish(result);
  }

 private:
  void validate() const {
    const int nb = static_cast<int>(p_.block_sizes.size());
    auto bad = [](const char* msg) {
      throw Error(ErrorCode::kInvalidArgument, msg);
    };
    if (static_cast<int>(p_.c.size()) != nb) bad("one C block per PSD block");
    if (static_cast<int>(p_.a.size()) != m_) bad("one A list per variable");
    for (int k = 0; k < nb; ++k) {
      if (p_.c[k].rows() != p_.block_sizes[k] ||
          p_.c[k].cols() != p_.block_sizes[k]) {
        bad("C block shape mismatch");
      }
    }
    if (lp_ > 0 && (p_.a_lp.rows() != lp_ || p_.a_lp.cols() != m_)) {
      bad("A_lp shape mismatch");
    }
    for (const auto& list : p_.a) {
      for (const auto& e : list) {
        if (e.block < 0 || e.block >= nb || e.row < 0 || e.col < 0 ||
            e.row >= p_.block_sizes[e.block] || e.col >= p_.block_sizes[e.block]) {
          bad("constraint entry out of range");
        }
      }
    }
  }

  // <A_i, Y> for every i (Y need not be symmetric).
  VectorXd apply_a(const Blocks& y_blocks, const VectorXd& y_lp) const {
    VectorXd out = VectorXd::Zero(m_);
    for (int i = 0; i < m_; ++i) {
      double s = 0.0;
      for (const Term& t : terms_[i]) s += t.value * y_blocks[t.block](t.col, t.row);
      out(i) = s;
    }
    if (lp_ > 0) out += p_.a_lp.transpose() * y_lp;
    return out;
  }

  Blocks apply_a_adjoint(const VectorXd& y) const {
    Blocks out(p_.block_sizes.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = MatrixXd::Zero(p_.block_sizes[k], p_.block_sizes[k]);
    }
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : terms_[i]) out[t.block](t.row, t.col) += y(i) * t.value;
    }
    return out;
  }

  VectorXd apply_a_lp_adjoint(const VectorXd& y) const {
    return lp_ > 0 ? VectorXd(p_.a_lp * y) : VectorXd();
  }

  void initialize() {
    const int nb = static_cast<int>(p_.block_sizes.size());
    std::vector<double> a_norm(nb * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : terms_[i]) a_norm[t.block * m_ + i] += t.value * t.value;
    }
    x_.assign(nb, MatrixXd());
    z_.assign(nb, MatrixXd());
    for (int k = 0; k < nb; ++k) {
      const double n = p_.block_sizes[k];
      double xi = std::max(10.0, std::sqrt(n));
      double eta = std::max(10.0, std::sqrt(n));
      double c_norm = p_.c[k].norm();
      for (int i = 0; i < m_; ++i) {
        double an = std::sqrt(a_norm[k * m_ + i]);
        xi = std::max(xi, n * (1.0 + std::abs(p_.b(i))) / (1.0 + an));
        eta = std::max(eta, (1.0 + std::max(an, c_norm)) / std::sqrt(n));
      }
      x_[k] = xi * MatrixXd::Identity(static_cast<long>(n), static_cast<long>(n));
      z_[k] = eta * MatrixXd::Identity(static_cast<long>(n), static_cast<long>(n));
    }
    if (lp_ > 0) {
      double xi = 10.0;
      double eta = 10.0;
      for (int i = 0; i < m_; ++i) {
        double an = p_.a_lp.col(i).norm();
        xi = std::max(xi, (1.0 + std::abs(p_.b(i))) / (1.0 + an));
        eta = std::max(eta, 1.0 + std::max(an, p_.c_lp.norm()));
      }
      x_lp_ = VectorXd::Constant(lp_, xi);
      z_lp_ = VectorXd::Constant(lp_, eta);
    }
    y_ = VectorXd::Zero(m_);
  }

  double mu() const {
    double s = 0.0;
    for (std::size_t k = 0; k < x_.size(); ++k) s += (x_[k].cwiseProduct(z_[k])).sum();
    if (lp_ > 0) s += x_lp_.dot(z_lp_);
    return s / n_total_;
  }

  void measure(SdpResult& r) const {
    VectorXd rp = p_.b - apply_a(x_, x_lp_);
    Blocks ay = apply_a_adjoint(y_);
    double rd2 = 0.0;
    double c2 = 0.0;
    double pobj = 0.0;
    for (std::size_t k = 0; k < x_.size(); ++k) {
      rd2 += (p_.c[k] - z_[k] - ay[k]).squaredNorm();
      c2 += p_.c[k].squaredNorm();
      pobj += (p_.c[k].cwiseProduct(x_[k])).sum();
    }
    if (lp_ > 0) {
      rd2 += (p_.c_lp - z_lp_ - p_.a_lp * y_).squaredNorm();
      c2 += p_.c_lp.squaredNorm();
      pobj += p_.c_lp.dot(x_lp_);
    }
    double dobj = p_.b.dot(y_);
    r.primal_objective = pobj;
    r.dual_objective = dobj;
    r.primal_infeasibility = rp.norm() / (1.0 + p_.b.norm());
    r.dual_infeasibility = std::sqrt(rd2) / (1.0 + std::sqrt(c2));
    double scale = 1.0 + std::abs(pobj) + std::abs(dobj);
    r.relative_gap = std::max(std::abs(pobj - dobj), mu() * n_total_) / scale;
  }

  static bool converged(const SdpResult& r, double tol) {
    return r.primal_infeasibility <= tol && r.dual_infeasibility <= tol &&
           r.relative_gap <= tol;
  }

  SdpResult& finish(SdpResult& r) {
    r.y = y_;
    r.x = x_;
    r.z = z_;
    r.x_lp = x_lp_;
    r.z_lp = z_lp_;
    return r;
  }

  // Largest alpha with V + alpha dV still PSD (infinity if unbounded).
  static double max_step(const MatrixXd& v, const MatrixXd& dv) {
    Eigen::LLT<MatrixXd> llt(v);
    if (llt.info() != Eigen::Success) return 0.0;
    MatrixXd l_inv_dv = llt.matrixL().solve(dv);
    MatrixXd s = llt.matrixL().solve(l_inv_dv.transpose()).transpose();
    s = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(s, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues()(0);
    return lo >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lo;
  }

  static double max_step_lp(const VectorXd& v, const VectorXd& dv) {
    double a = std::numeric_limits<double>::infinity();
    for (long i = 0; i < v.size(); ++i) {
      if (dv(i) < 0.0) a = std::min(a, -v(i) / dv(i));
    }
    return a;
  }

  struct Direction {
    Blocks dx;
    Blocks dz;
    VectorXd dx_lp;
    VectorXd dz_lp;
    VectorXd dy;
  };

  // Solves for the HKM direction targeting X Z = target_mu I, with optional
  // second-order correction from a predictor direction.
  Direction direction(const Eigen::LLT<MatrixXd>& schur, const Blocks& w,
                      const VectorXd& rp, const Blocks& rd, const VectorXd& rd_lp,
                      double target_mu, const Direction* corr) const {
    const std::size_t nb = x_.size();
    Blocks h(nb);
    Blocks g(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      g[k] = target_mu * w[k] - x_[k];
      if (corr) g[k] -= corr->dx[k] * corr->dz[k] * w[k];
      h[k] = g[k] - x_[k] * rd[k] * w[k];
    }
    VectorXd g_lp;
    VectorXd h_lp;
    if (lp_ > 0) {
      g_lp = (VectorXd::Constant(lp_, target_mu) - x_lp_.cwiseProduct(z_lp_));
      if (corr) g_lp -= corr->dx_lp.cwiseProduct(corr->dz_lp);
      g_lp = g_lp.cwiseQuotient(z_lp_);
      h_lp = g_lp - x_lp_.cwiseProduct(rd_lp).cwiseQuotient(z_lp_);
    }
    VectorXd rhs = rp - apply_a(h, h_lp);

    Direction d;
    d.dy = schur.solve(rhs);
    Blocks ady = apply_a_adjoint(d.dy);
    d.dz.resize(nb);
    d.dx.resize(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      d.dz[k] = rd[k] - ady[k];
      MatrixXd dx = g[k] - x_[k] * d.dz[k] * w[k];
      d.dx[k] = 0.5 * (dx + dx.transpose());
    }
    if (lp_ > 0) {
      d.dz_lp = rd_lp - p_.a_lp * d.dy;
      d.dx_lp = g_lp - x_lp_.cwiseProduct(d.dz_lp).cwiseQuotient(z_lp_);
    }
    return d;
  }

  std::pair<double, double> step_lengths(const Direction& d) const {
    double ap = std::numeric_limits<double>::infinity();
    double ad = ap;
    for (std::size_t k = 0; k < x_.size(); ++k) {
      ap = std::min(ap, max_step(x_[k], d.dx[k]));
      ad = std::min(ad, max_step(z_[k], d.dz[k]));
    }
    if (lp_ > 0) {
      ap = std::min(ap, max_step_lp(x_lp_, d.dx_lp));
      ad = std::min(ad, max_step_lp(z_lp_, d.dz_lp));
    }
    return {ap, ad};
  }

  bool step() {
    const std::size_t nb = x_.size();
    Blocks w(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      Eigen::LLT<MatrixXd> llt(z_[k]);
      if (llt.info() != Eigen::Success) return false;
      w[k] = llt.solve(MatrixXd::Identity(z_[k].rows(), z_[k].cols()));
      w[k] = 0.5 * (w[k] + w[k].transpose());
    }

    MatrixXd schur = MatrixXd::Zero(m_, m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = i; j < m_; ++j) {
        double s = 0.0;
        for (const Term& ti : terms_[i]) {
          const MatrixXd& xk = x_[ti.block];
          const MatrixXd& wk = w[ti.block];
          for (const Term& tj : terms_[j]) {
            if (tj.block != ti.block) continue;
            s += ti.value * tj.value * xk(ti.col, tj.row) * wk(tj.col, ti.row);
          }
        }
        schur(i, j) = s;
      }
    }
    if (lp_ > 0) {
      VectorXd ratio = x_lp_.cwiseQuotient(z_lp_);
      schur.triangularView<Eigen::Upper>() +=
          p_.a_lp.transpose() * ratio.asDiagonal() * p_.a_lp;
    }
    schur = schur.selfadjointView<Eigen::Upper>();
    Eigen::LLT<MatrixXd> llt(schur);
    if (llt.info() != Eigen::Success) {
      double bump = 1e-13 * std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
      schur.diagonal().array() += bump;
      llt.compute(schur);
      if (llt.info() != Eigen::Success) return false;
    }

    VectorXd rp = p_.b - apply_a(x_, x_lp_);
    Blocks ay = apply_a_adjoint(y_);
    Blocks rd(nb);
    for (std::size_t k = 0; k < nb; ++k) rd[k] = p_.c[k] - z_[k] - ay[k];
    VectorXd rd_lp;
    if (lp_ > 0) rd_lp = p_.c_lp - z_lp_ - p_.a_lp * y_;

    const double mu_now = mu();
    Direction pred = direction(llt, w, rp, rd, rd_lp, 0.0, nullptr);
    auto [ap, ad] = step_lengths(pred);
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    double mu_aff = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      mu_aff += ((x_[k] + ap * pred.dx[k]).cwiseProduct(z_[k] + ad * pred.dz[k])).sum();
    }
    if (lp_ > 0) {
      mu_aff += (x_lp_ + ap * pred.dx_lp).dot(z_lp_ + ad * pred.dz_lp);
    }
    mu_aff /= n_total_;
    double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu_now, 3.0), 0.0, 1.0);

    Direction d = direction(llt, w, rp, rd, rd_lp, sigma * mu_now, &pred);
    auto [sp, sd] = step_lengths(d);
    constexpr double kGamma = 0.95;
    sp = std::min(1.0, kGamma * sp);
    sd = std::min(1.0, kGamma * sd);
    if (sp < 1e-10 && sd < 1e-10) {
      ++stalled_;
      return true;
    }
    for (std::size_t k = 0; k < nb; ++k) {
      x_[k] += sp * d.dx[k];
      z_[k] += sd * d.dz[k];
    }
    if (lp_ > 0) {
      x_lp_ += sp * d.dx_lp;
      z_lp_ += sd * d.dz_lp;
    }
    y_ += sd * d.dy;
    return true;
  }

  const SdpProblem& p_;
  const SdpOptions& o_;
  int m_ = 0;
  int lp_ = 0;
  int n_total_ = 0;
  int stalled_ = 0;
  std::vector<std::vector<Term>> terms_;
  Blocks x_;
  Blocks z_;
  VectorXd x_lp_;
  VectorXd z_lp_;
  VectorXd y_;
};

}  // namespace

std::string_view sdp_status_name(SdpStatus status) {
  switch (status) {
    case SdpStatus::kOptimal: return "optimal";
    case SdpStatus::kNearOptimal: return "near_optimal";
    case SdpStatus::kMaxIterations: return "max_iterations";
    case SdpStatus::kNumericalError: return "numerical_error";
  }
  return "?";
}

SdpResult solve_sdp(const SdpProblem& problem, const SdpOptions& options) {
  return Solver(problem, options).run();
}

double default_solver_tolerance() {
  if (const char* env = std::getenv("QROVER_SOLVER_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && v < 1.0) return v;
  }
  return 1e-8;
}

}  // namespace qrover
