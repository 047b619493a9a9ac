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

#ifndef QROVER_LINALG_H_
#define QROVER_LINALG_H_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qrover {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical tolerances shared by every module. Call sites that need a
/// different trade-off copy the defaults and override individual fields.
struct Tolerances {
  double hermitian = 1e-10;
  double psd = 1e-9;
  double trace = 1e-10;
  double unit_norm = 1e-10;
  double completeness = 1e-8;
  double distribution = 1e-8;
};

const Tolerances& default_tolerances();

struct HermitianEig {
  RVector values;  // descending
  CMatrix vectors;  // columns, matching `values`
};

/// Max-norm of m - m^dagger.
/// (m + m^dagger) / 2.
CMatrix hermitian_part(const CMatrix& m);
double hermitian_defect(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol);
bool is_finite(const CMatrix& m);

/// Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.
/// Throws kNotHermitian when the symmetry defect exceeds `tol`.
HermitianEig hermitian_eig(const CMatrix& m,
                           double tol = default_tolerances().hermitian);

/// Principal square root of a PSD matrix. Eigenvalues in [-psd_tol, 0) are
/// clamped to zero; anything more negative throws kNotPsd.
CMatrix matrix_sqrt_psd(const CMatrix& m,
                        const Tolerances& tol = default_tolerances());

double min_eigenvalue(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column-stacking vectorization and its inverse.
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, int dim);

/// A Hermitian, PSD, unit-trace matrix. Construction validates; the stored
/// matrix is exactly Hermitian (the input is symmetrized after the check).
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMatrix& m,
                         const Tolerances& tol = default_tolerances());

  static DensityMatrix from_pure(const CVector& psi,
                                 const Tolerances& tol = default_tolerances());
  static DensityMatrix basis(int dim, int index);
  static DensityMatrix maximally_mixed(int dim);

  /// Nearest valid state to an approximately valid matrix: Hermitian part,
  /// negative eigenvalues clamped, trace renormalized. Used to clean solver
  /// output, never to accept arbitrary input.
  static DensityMatrix project(const CMatrix& m);

  const CMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  int n_qubits() const;

  bool operator==(const DensityMatrix& other) const { return m_ == other.m_; }

 private:
  struct Unchecked {};
  DensityMatrix(const CMatrix& m, Unchecked) : m_(m) {}

  CMatrix m_;
};

/// Unit-norm state vector.
class PureState {
 public:
  explicit PureState(const CVector& amplitudes,
                     const Tolerances& tol = default_tolerances());

  const CVector& amplitudes() const { return psi_; }
  int dim() const { return static_cast<int>(psi_.size()); }
  DensityMatrix to_density() const;

 private:
  CVector psi_;
};

/// Eigenvalues at or below this are treated as exact zeros by fidelity().
constexpr double kFidelityRankCutoff = 1e-13;

/// Squared Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 1 - fidelity.
double fidelity_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Returns log2(dim) if dim is a power of two, otherwise -1.
int qubits_for_dim(long dim);

namespace pauli {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
}  // namespace pauli

}  // namespace qrover

#endif  // QROVER_LINALG_H_
