// Copyright 2026 The abscompat Authors
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
#include <numbers>

#include "abscompat/error.hpp"
#include "abscompat/matrix.hpp"
#include "abscompat/random.hpp"
#include "test_support.hpp"

namespace abscompat {
namespace {

using testing::real_matrix;

const HermitianMatrix kSwap = HermitianMatrix::real(2, {0, 1, 1, 0});
const HermitianMatrix kWorkedA = HermitianMatrix::real(2, {0.25, 0.25, 0.25, 0.75});
const HermitianMatrix kWorkedB = HermitianMatrix::real(2, {0.25, -0.25, -0.25, 0.75});

// Roots of the characteristic polynomial of a real symmetric 2x2 matrix.
std::pair<double, double> char_poly_roots(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
  return {mean - radius, mean + radius};
}

TEST(SpectralDecompose, Identity) {
  const auto s = spectral_decompose(HermitianMatrix::identity(2));
  EXPECT_NEAR(s.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues(1), 1.0, 1e-15);
  EXPECT_MATRIX_NEAR(CMatrix(s.eigenvectors.adjoint() * s.eigenvectors),
                     CMatrix(CMatrix::Identity(2, 2)), 1e-14);
}

TEST(SpectralDecompose, DiagonalKeepsStandardBasis) {
  const auto s = spectral_decompose(HermitianMatrix::diagonal({0.3, 0.7}));
  EXPECT_NEAR(s.eigenvalues(0), 0.3, 1e-15);
  EXPECT_NEAR(s.eigenvalues(1), 0.7, 1e-15);
  EXPECT_NEAR(std::abs(s.eigenvectors(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.eigenvectors(1, 1)), 1.0, 1e-14);
}

TEST(SpectralDecompose, SwapMatchesCharacteristicPolynomial) {
  const auto s = spectral_decompose(kSwap);
  const auto [lo, hi] = char_poly_roots(0, 1, 0);
  EXPECT_NEAR(s.eigenvalues(0), lo, 1e-15);
  EXPECT_NEAR(s.eigenvalues(1), hi, 1e-15);
  EXPECT_DOUBLE_EQ(lo, -1.0);
  EXPECT_MATRIX_NEAR(s.reconstruct(), kSwap.matrix(), 1e-14);
}

TEST(SpectralDecompose, ReconstructsRandomInput) {
  Rng rng(11);
  const CMatrix g = gaussian_matrix(9, 9, rng);
  const HermitianMatrix x(CMatrix(g + g.adjoint()));
  const auto s = spectral_decompose(x);
  EXPECT_LE(op_norm(CMatrix(s.reconstruct() - x.matrix())), 1e-12);
  for (Index k = 1; k < 9; ++k) EXPECT_LE(s.eigenvalues(k - 1), s.eigenvalues(k));
}

TEST(ApplySpectralFunction, IdentityFunctionReturnsInput) {
  Rng rng(3);
  const CMatrix g = gaussian_matrix(5, 5, rng);
  const HermitianMatrix x(CMatrix(g + g.adjoint()));
  EXPECT_MATRIX_NEAR(apply_spectral_function(x, [](double t) { return t; }).matrix(),
                     x.matrix(), 1e-12);
}

TEST(ApplySpectralFunction, ConstantOneGivesIdentity) {
  const auto r = apply_spectral_function(HermitianMatrix::diagonal({0.2, 0.5}),
                                         [](double) { return 1.0; });
  EXPECT_MATRIX_NEAR(r.matrix(), CMatrix(CMatrix::Identity(2, 2)), 1e-15);
}

TEST(ApplySpectralFunction, SquareOfSwapIsIdentity) {
  const auto r = apply_spectral_function(kSwap, [](double t) { return t * t; });
  EXPECT_MATRIX_NEAR(r.matrix(), CMatrix(CMatrix::Identity(2, 2)), 1e-14);
}

TEST(AbsOp, Examples) {
  EXPECT_MATRIX_NEAR(abs_op(HermitianMatrix::diagonal({-0.3, 0.3})).matrix(),
                     HermitianMatrix::diagonal({0.3, 0.3}).matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(abs_op(HermitianMatrix::zero(3)).matrix(), CMatrix(CMatrix::Zero(3, 3)),
                     0.0);
  EXPECT_MATRIX_NEAR(abs_op(kSwap).matrix(), CMatrix(CMatrix::Identity(2, 2)), 1e-14);
}

TEST(SqrtOp, Examples) {
  EXPECT_MATRIX_NEAR(sqrt_op(HermitianMatrix::identity(2)).matrix(),
                     CMatrix(CMatrix::Identity(2, 2)), 1e-15);
  EXPECT_MATRIX_NEAR(sqrt_op(HermitianMatrix::diagonal({0.25, 0.81})).matrix(),
                     HermitianMatrix::diagonal({0.5, 0.9}).matrix(), 1e-15);
  const HermitianMatrix quarter = HermitianMatrix::real(2, {0.25, 0.25, 0.25, 0.25});
  const double c = 1.0 / (2.0 * std::numbers::sqrt2);
  const CMatrix want = real_matrix(2, 2, {c, c, c, c});
  const CMatrix got = sqrt_op(quarter).matrix();
  EXPECT_MATRIX_NEAR(got, want, 1e-14);
  EXPECT_MATRIX_NEAR(CMatrix(got * got), quarter.matrix(), 1e-14);
}

TEST(SqrtOp, ClampsTinyNegativesAndRejectsLargeOnes) {
  const auto r = sqrt_op(HermitianMatrix::diagonal({-5e-9, 0.04}));
  EXPECT_MATRIX_NEAR(r.matrix(), HermitianMatrix::diagonal({0.0, 0.2}).matrix(), 1e-15);
  try {
    sqrt_op(HermitianMatrix::diagonal({-1e-3, 0.5}));
    FAIL() << "expected NotPositive";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositive);
  }
}

TEST(Jordan, Examples) {
  Rng rng(5);
  const CMatrix g = gaussian_matrix(4, 4, rng);
  const HermitianMatrix x(CMatrix(g + g.adjoint()));
  EXPECT_MATRIX_NEAR(jordan(HermitianMatrix::identity(4), x).matrix(), x.matrix(), 1e-14);
  EXPECT_MATRIX_NEAR(
      jordan(HermitianMatrix::diagonal({0.5, 0}), HermitianMatrix::diagonal({0, 0.5})).matrix(),
      CMatrix(CMatrix::Zero(2, 2)), 0.0);
  EXPECT_MATRIX_NEAR(jordan(kWorkedA, kWorkedB).matrix(), real_matrix(2, 2, {0, 0, 0, 0.5}),
                     1e-15);
}

TEST(Jordan, RejectsMismatchedDimensions) {
  EXPECT_THROW(jordan(HermitianMatrix::identity(2), HermitianMatrix::identity(3)), Error);
}

TEST(InUnitInterval, Examples) {
  EXPECT_TRUE(in_unit_interval(HermitianMatrix::diagonal({0, 1})));
  EXPECT_FALSE(in_unit_interval(HermitianMatrix::diagonal({0.5, 1.5})));
  EXPECT_TRUE(in_unit_interval(kWorkedA));
  const auto [lo, hi] = char_poly_roots(0.25, 0.25, 0.75);
  EXPECT_NEAR(lo, (1.0 - std::numbers::sqrt2 / 2.0) / 2.0, 1e-15);
  const auto s = spectral_decompose(kWorkedA);
  EXPECT_NEAR(s.eigenvalues(0), lo, 1e-15);
  EXPECT_NEAR(s.eigenvalues(1), hi, 1e-15);
}

TEST(HermitianMatrix, IngestSymmetrizes) {
  CMatrix raw = real_matrix(2, 2, {1, 2, 2 + 1e-9, 3});
  const HermitianMatrix h = HermitianMatrix::checked(raw, {});
  EXPECT_EQ(h.matrix(), h.matrix().adjoint());
  EXPECT_NEAR(h.asymmetry(), 0.5e-9, 1e-15);
  raw(1, 0) = 2.5;
  EXPECT_THROW(HermitianMatrix::checked(raw, {}), Error);
}

TEST(UnitIntervalElement, RejectsOutOfRangeSpectrum) {
  EXPECT_NO_THROW(UnitIntervalElement(HermitianMatrix::diagonal({0, 1})));
  try {
    UnitIntervalElement(HermitianMatrix::diagonal({0.5, 1.5}));
    FAIL() << "expected OutOfUnitInterval";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfUnitInterval);
  }
}

TEST(OpNorm, MatchesSingularValues) {
  Rng rng(17);
  for (int t = 0; t < 5; ++t) {
    const CMatrix x = gaussian_matrix(6, 4, rng);
    Eigen::JacobiSVD<CMatrix> svd(x);
    EXPECT_NEAR(op_norm(x), svd.singularValues()(0), 1e-12);
  }
  EXPECT_NEAR(op_norm(real_matrix(2, 2, {0, 0, 1e-13, 0})), 1e-13, 1e-20);
  EXPECT_EQ(op_norm(CMatrix(CMatrix::Zero(3, 3))), 0.0);
}

TEST(CommutatorNorm, DiagonalAgainstSwap) {
  EXPECT_NEAR(commutator_norm(HermitianMatrix::diagonal({1, 2}).matrix(), kSwap.matrix()),
              1.0, 1e-14);
}

TEST(Tolerance, Validate) {
  EXPECT_NO_THROW(Tolerance{}.validate());
  EXPECT_THROW((Tolerance{-1.0, 1e-7}).validate(), Error);
  EXPECT_THROW((Tolerance{1e-8, std::nan("")}).validate(), Error);
}

}  // namespace
}  // namespace abscompat
