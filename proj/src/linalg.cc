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

#include "qrover/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrover/error.h"

namespace qrover {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidNoise: return "InvalidNoise";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kDistributionInvalid: return "DistributionInvalid";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTooFewClasses: return "TooFewClasses";
    case ErrorCode::kSolverFailure: return "SolverFailure";
    case ErrorCode::kSandwichViolation: return "SandwichViolation";
    case ErrorCode::kNonShiftableGate: return "NonShiftableGate";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDiverged: return "Diverged";
    case ErrorCode::kManifest: return "ManifestError";
    case ErrorCode::kInvalidPovm: return "InvalidPovm";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

const Tolerances& default_tolerances() {
  static const Tolerances kDefaults{};
  return kDefaults;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint().eval()); }

double hermitian_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return hermitian_defect(m) <= tol;
}

bool is_finite(const CMatrix& m) { return m.allFinite(); }

HermitianEig hermitian_eig(const CMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimMismatch, "hermitian_eig needs a square matrix");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kNotHermitian, "matrix has non-finite entries");
  }
  double defect = hermitian_defect(m);
  if (defect > tol) {
    throw Error(ErrorCode::kNotHermitian,
                "symmetry defect " + std::to_string(defect));
  }
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotHermitian, "eigensolver did not converge");
  }
  HermitianEig out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

CMatrix matrix_sqrt_psd(const CMatrix& m, const Tolerances& tol) {
  HermitianEig eig = hermitian_eig(m, tol.hermitian);
  const long n = eig.values.size();
  if (eig.values(n - 1) < -tol.psd) {
    throw Error(ErrorCode::kNotPsd,
                "min eigenvalue " + std::to_string(eig.values(n - 1)));
  }
  RVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * roots.cast<Complex>().asDiagonal() *
         eig.vectors.adjoint();
}

double min_eigenvalue(const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvec(const CVector& v, int dim) {
  return Eigen::Map<const CMatrix>(v.data(), dim, dim);
}

int qubits_for_dim(long dim) {
  if (dim < 1) return -1;
  int n = 0;
  while ((1L << n) < dim) ++n;
  return (1L << n) == dim ? n : -1;
}

DensityMatrix::DensityMatrix(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidState, "density matrix must be square");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kInvalidState, "non-finite entries");
  }
  if (hermitian_defect(m) > tol.hermitian) {
    throw Error(ErrorCode::kInvalidState, "not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol.trace) {
    throw Error(ErrorCode::kInvalidState, "trace is not 1");
  }
  if (min_eigenvalue(m) < -tol.psd) {
    throw Error(ErrorCode::kInvalidState, "not positive semidefinite");
  }
  m_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::from_pure(const CVector& psi,
                                       const Tolerances& tol) {
  return PureState(psi, tol).to_density();
}

DensityMatrix DensityMatrix::basis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw Error(ErrorCode::kOutOfRange, "basis index out of range");
  }
  CMatrix m = CMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(m, Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw Error(ErrorCode::kOutOfRange, "dimension must be >= 1");
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim),
                       Unchecked{});
}

DensityMatrix DensityMatrix::project(const CMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols() || !m.allFinite()) {
    throw Error(ErrorCode::kInvalidState, "cannot project malformed matrix");
  }
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  RVector values = solver.eigenvalues().cwiseMax(0.0);
  double total = values.sum();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kInvalidState, "projection has zero trace");
  }
  values /= total;
  CMatrix out = solver.eigenvectors() * values.cast<Complex>().asDiagonal() *
                solver.eigenvectors().adjoint();
  return DensityMatrix(hermitian_part(out), Unchecked{});
}

int DensityMatrix::n_qubits() const { return qubits_for_dim(m_.rows()); }

PureState::PureState(const CVector& amplitudes, const Tolerances& tol) {
  if (amplitudes.size() < 1 || !amplitudes.allFinite()) {
    throw Error(ErrorCode::kInvalidState, "malformed state vector");
  }
  if (std::abs(amplitudes.norm() - 1.0) > tol.unit_norm) {
    throw Error(ErrorCode::kInvalidState, "state vector is not unit norm");
  }
  psi_ = amplitudes;
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix::project(psi_ * psi_.adjoint());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimMismatch, "fidelity of states with dims " +
                                             std::to_string(rho.dim()) + " and " +
                                             std::to_string(sigma.dim()));
  }
  // sqrt F is the trace norm of sqrt(rho) sqrt(sigma). Working in both
  // eigenbases and zeroing eigenvalues at round-off level keeps kernel noise
  // (about 1e-16) from leaking into F through the square roots.
  auto factor = [](const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m));
    RVector roots = solver.eigenvalues();
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
      roots(i) = roots(i) > kFidelityRankCutoff ? std::sqrt(roots(i)) : 0.0;
    }
    return CMatrix(solver.eigenvectors() * roots.cast<Complex>().asDiagonal());
  };
  CMatrix cross = factor(rho.matrix()).adjoint() * factor(sigma.matrix());
  Eigen::JacobiSVD<CMatrix> svd(cross);
  double root_fidelity = svd.singularValues().sum();
  return std::clamp(root_fidelity * root_fidelity, 0.0, 1.0);
}

double fidelity_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 1.0 - fidelity(rho, sigma);
}

namespace pauli {
CMatrix I() { return CMatrix::Identity(2, 2); }
CMatrix X() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix Y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
CMatrix Z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

}  // namespace qrover
