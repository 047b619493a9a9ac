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

#include <random>

#include "gtest/gtest.h"
#include "qrover/error.h"
#include "test_util.h"

namespace qrover {
namespace {

using testing::random_state;
using testing::random_unitary;

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(HermitianEig, IdentityAndPauli) {
  HermitianEig id = hermitian_eig(CMatrix::Identity(2, 2));
  EXPECT_NEAR(id.values(0), 1.0, 1e-12);
  EXPECT_NEAR(id.values(1), 1.0, 1e-12);

  HermitianEig z = hermitian_eig(pauli::Z());
  EXPECT_NEAR(z.values(0), 1.0, 1e-12);
  EXPECT_NEAR(z.values(1), -1.0, 1e-12);
  EXPECT_NEAR(std::abs(z.vectors(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(z.vectors(1, 1)), 1.0, 1e-12);

  HermitianEig x = hermitian_eig(pauli::X());
  EXPECT_NEAR(x.values(0), 1.0, 1e-12);
  EXPECT_NEAR(x.values(1), -1.0, 1e-12);
  // Eigenvectors (1, 1)/sqrt2 and (1, -1)/sqrt2, up to phase.
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(x.vectors(0, 0)), h, 1e-12);
  EXPECT_NEAR(std::abs(x.vectors(1, 0)), h, 1e-12);
  EXPECT_NEAR(std::abs(x.vectors(0, 0) - x.vectors(1, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(x.vectors(0, 1) + x.vectors(1, 1)), 0.0, 1e-12);
}

TEST(HermitianEig, ReconstructsRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = 1 + static_cast<int>(rng() % 8);
    CMatrix g = testing::ginibre(dim, dim, rng);
    CMatrix h = g + g.adjoint();
    HermitianEig e = hermitian_eig(h);
    for (int i = 1; i < dim; ++i) EXPECT_GE(e.values(i - 1), e.values(i));
    CMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() *
                   e.vectors.adjoint();
    EXPECT_LE(max_abs(back - h), 1e-8);
    EXPECT_LE(max_abs(e.vectors.adjoint() * e.vectors -
                      CMatrix::Identity(dim, dim)),
              1e-8);
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  CMatrix m(2, 2);
  m << 1, 2, 0, 1;
  try {
    hermitian_eig(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHermitian);
  }
}

TEST(MatrixSqrt, Examples) {
  EXPECT_LE(max_abs(matrix_sqrt_psd(CMatrix::Identity(3, 3)) -
                    CMatrix::Identity(3, 3)),
            1e-12);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 9;
  CMatrix r = matrix_sqrt_psd(d);
  EXPECT_NEAR(r(0, 0).real(), 2.0, 1e-12);
  EXPECT_NEAR(r(1, 1).real(), 3.0, 1e-12);
  CMatrix plus = 0.5 * CMatrix::Ones(2, 2);
  EXPECT_LE(max_abs(matrix_sqrt_psd(plus) - plus), 1e-12);
}

TEST(MatrixSqrt, ClampsRoundOffButRejectsNegative) {
  CMatrix slightly = CMatrix::Zero(2, 2);
  slightly(0, 0) = 1.0;
  slightly(1, 1) = -5e-10;
  CMatrix r = matrix_sqrt_psd(slightly);
  EXPECT_EQ(r(1, 1), Complex(0.0, 0.0));

  CMatrix negative = slightly;
  negative(1, 1) = -1e-6;
  try {
    matrix_sqrt_psd(negative);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPsd);
  }
}

TEST(MatrixSqrt, SquaresBack) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 1 + static_cast<int>(rng() % 6);
    DensityMatrix rho = random_state(dim, rng, 1 + static_cast<int>(rng() % dim));
    CMatrix r = matrix_sqrt_psd(rho.matrix());
    EXPECT_LE(max_abs(r * r - rho.matrix()), 1e-8);
    EXPECT_GE(min_eigenvalue(r), -1e-9);
  }
}

TEST(DensityMatrix, ValidatesInvariants) {
  CMatrix not_unit = CMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{not_unit}, Error);
  CMatrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix{negative}, Error);
  CMatrix skew(2, 2);
  skew << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(DensityMatrix{skew}, Error);
  CMatrix nan = 0.5 * CMatrix::Identity(2, 2);
  nan(0, 1) = Complex(NAN, 0);
  EXPECT_THROW(DensityMatrix{nan}, Error);
  EXPECT_NO_THROW(DensityMatrix{0.5 * CMatrix::Identity(2, 2)});
  EXPECT_EQ(DensityMatrix::maximally_mixed(4).n_qubits(), 2);
}

TEST(PureState, RequiresUnitNorm) {
  CVector v(2);
  v << 1, 1;
  EXPECT_THROW(PureState{v}, Error);
  v /= std::sqrt(2.0);
  DensityMatrix rho = PureState(v).to_density();
  EXPECT_NEAR(rho.matrix()(0, 1).real(), 0.5, 1e-12);
}

TEST(Fidelity, Examples) {
  DensityMatrix zero = DensityMatrix::basis(2, 0);
  DensityMatrix one = DensityMatrix::basis(2, 1);
  DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(zero, one), 0.0, 1e-12);
  EXPECT_NEAR(fidelity(zero, mixed), 0.5, 1e-12);
  EXPECT_NEAR(fidelity_distance(zero, zero), 0.0, 1e-12);
  EXPECT_NEAR(fidelity_distance(zero, one), 1.0, 1e-12);
  EXPECT_NEAR(fidelity_distance(zero, mixed), 0.5, 1e-12);
  try {
    fidelity(zero, DensityMatrix::maximally_mixed(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimMismatch);
  }
}

TEST(Fidelity, SymmetryAndUnitaryInvariance) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int dim = 1 << (1 + rng() % 3);
    DensityMatrix rho = random_state(dim, rng, 1 + static_cast<int>(rng() % dim));
    DensityMatrix sigma = random_state(dim, rng, 1 + static_cast<int>(rng() % dim));
    double f = fidelity(rho, sigma);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_NEAR(f, fidelity(sigma, rho), 1e-8);
    CMatrix u = random_unitary(dim, rng);
    DensityMatrix rho_u = DensityMatrix::project(u * rho.matrix() * u.adjoint());
    DensityMatrix sigma_u = DensityMatrix::project(u * sigma.matrix() * u.adjoint());
    EXPECT_NEAR(fidelity(rho_u, sigma_u), f, 1e-8);
  }
}

TEST(Fidelity, PureStateShortcut) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int dim = 1 << (1 + rng() % 3);
    CVector psi = testing::ginibre(dim, 1, rng).col(0);
    psi.normalize();
    DensityMatrix rho = DensityMatrix::from_pure(psi);
    DensityMatrix sigma = random_state(dim, rng);
    double shortcut = (psi.adjoint() * sigma.matrix() * psi)(0, 0).real();
    EXPECT_NEAR(fidelity(rho, sigma), shortcut, 1e-8);
  }
}

TEST(Fidelity, OneExactlyForCoincidentStates) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 1 << (1 + rng() % 2);
    DensityMatrix rho = random_state(dim, rng);
    EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-8);
    DensityMatrix sigma = random_state(dim, rng);
    if ((rho.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() > 1e-6) {
      EXPECT_LT(fidelity(rho, sigma), 1.0 - 1e-12);
    }
  }
}

TEST(Fidelity, MatchesQubitClosedForm) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    DensityMatrix rho = random_state(2, rng);
    DensityMatrix sigma = random_state(2, rng);
    EXPECT_NEAR(fidelity(rho, sigma),
                testing::qubit_fidelity(rho.matrix(), sigma.matrix()), 1e-9);
  }
}

TEST(Vectorization, ColumnStacking) {
  CMatrix m(2, 2);
  m << 1, 2, 3, 4;
  CVector v = vec(m);
  EXPECT_EQ(v(1), Complex(3, 0));
  EXPECT_EQ(unvec(v, 2), m);
}

}  // namespace
}  // namespace qrover
