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
#include "abscompat/generators.hpp"
#include "abscompat/projections.hpp"
#include "abscompat/random.hpp"
#include "test_support.hpp"

namespace abscompat {
namespace {

using testing::real_matrix;

const HermitianMatrix kWorkedA = HermitianMatrix::real(2, {0.25, 0.25, 0.25, 0.75});
const HermitianMatrix kWorkedB = HermitianMatrix::real(2, {0.25, -0.25, -0.25, 0.75});

ProjectionMatrix diag_projection(std::initializer_list<double> d) {
  return ProjectionMatrix::from_matrix(HermitianMatrix::diagonal(d));
}

TEST(ProjectionMatrix, RankAndValidation) {
  const auto p = diag_projection({1, 1, 0});
  EXPECT_EQ(p.rank(), 2);
  EXPECT_FALSE(p.degenerate());
  EXPECT_EQ(p.complement().rank(), 1);
  try {
    ProjectionMatrix::from_matrix(HermitianMatrix::diagonal({0.5, 1}));
    FAIL() << "expected NotProjection";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotProjection);
  }
}

TEST(ProjectionMatrix, RangeBasisIsOrthonormalAndSpansRange) {
  Rng rng(8);
  const auto p = random_projection(7, 3, rng);
  const CMatrix q = p.range_basis();
  ASSERT_EQ(q.cols(), 3);
  EXPECT_MATRIX_NEAR(CMatrix(q.adjoint() * q), CMatrix(CMatrix::Identity(3, 3)), 1e-12);
  EXPECT_MATRIX_NEAR(CMatrix(q * q.adjoint()), p.matrix(), 1e-12);
}

TEST(RangeProjection, Examples) {
  EXPECT_MATRIX_NEAR(range_projection(HermitianMatrix::diagonal({0.5, 0})).matrix(),
                     HermitianMatrix::diagonal({1, 0}).matrix(), 1e-15);
  const auto zero = range_projection(HermitianMatrix::zero(2));
  EXPECT_EQ(zero.rank(), 0);
  EXPECT_MATRIX_NEAR(zero.matrix(), CMatrix(CMatrix::Zero(2, 2)), 0.0);
  const auto r = range_projection(jordan(kWorkedA, kWorkedB));
  EXPECT_MATRIX_NEAR(r.matrix(), HermitianMatrix::diagonal({0, 1}).matrix(), 1e-15);
  EXPECT_EQ(r.rank(), 1);
}

TEST(RangeProjection, RejectsIndefiniteInput) {
  try {
    range_projection(HermitianMatrix::diagonal({-0.1, 0.5}));
    FAIL() << "expected NotPositive";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositive);
  }
}

TEST(NullProjection, Examples) {
  EXPECT_MATRIX_NEAR(
      null_projection(UnitIntervalElement(HermitianMatrix::diagonal({1, 0.5, 0}))).matrix(),
      HermitianMatrix::diagonal({0, 0, 1}).matrix(), 1e-15);
  EXPECT_EQ(null_projection(UnitIntervalElement(HermitianMatrix::identity(2))).rank(), 0);
  const auto n = null_projection(
      UnitIntervalElement(HermitianMatrix::real(2, {0.25, 0.25, 0.25, 0.25})));
  // Kernel of the all-quarters matrix: span of (1, -1)/sqrt(2).
  EXPECT_MATRIX_NEAR(n.matrix(), real_matrix(2, 2, {0.5, -0.5, -0.5, 0.5}), 1e-14);
}

TEST(OneProjection, Examples) {
  EXPECT_MATRIX_NEAR(
      one_projection(UnitIntervalElement(HermitianMatrix::diagonal({1, 0.5, 0}))).matrix(),
      HermitianMatrix::diagonal({1, 0, 0}).matrix(), 1e-15);
  EXPECT_EQ(one_projection(UnitIntervalElement(HermitianMatrix::diagonal({0.3, 0.7}))).rank(),
            0);
}

TEST(OneProjection, ThresholdWindow) {
  Rng rng(1);
  const CMatrix V = haar_unitary(2, rng);
  const HermitianMatrix a(
      CMatrix(V * HermitianMatrix::diagonal({1.0, 1.0 - 5e-9}).matrix() * V.adjoint()));
  const auto s = one_projection(UnitIntervalElement(a), Tolerance{1e-8, 1e-7});
  EXPECT_EQ(s.rank(), 2);
  EXPECT_MATRIX_NEAR(s.matrix(), CMatrix(CMatrix::Identity(2, 2)), 1e-12);
  // Narrowing the window drops the second eigenvalue.
  EXPECT_EQ(one_projection(UnitIntervalElement(a), Tolerance{1e-9, 1e-7}).rank(), 1);
}

TEST(IsStrict, Examples) {
  EXPECT_TRUE(is_strict(UnitIntervalElement(HermitianMatrix::diagonal({0.2, 0.9}))));
  EXPECT_FALSE(is_strict(UnitIntervalElement(HermitianMatrix::diagonal({1, 0.5}))));
  EXPECT_TRUE(is_strict(UnitIntervalElement(kWorkedA)));
  EXPECT_FALSE(is_strict(UnitIntervalElement(HermitianMatrix::diagonal({0.5, 0}))));
}

TEST(Commutes, Examples) {
  Rng rng(2);
  const CMatrix g = gaussian_matrix(3, 3, rng);
  const HermitianMatrix x(CMatrix(g + g.adjoint()));
  EXPECT_TRUE(commutes(x, HermitianMatrix::identity(3)));
  EXPECT_FALSE(commutes(HermitianMatrix::diagonal({1, 2}), HermitianMatrix::real(2, {0, 1, 1, 0})));
  EXPECT_FALSE(commutes(kWorkedA, kWorkedB));
  EXPECT_NEAR(commutator_norm(kWorkedA.matrix(), kWorkedB.matrix()), 0.25, 1e-15);
}

TEST(BlockDecompose, IdentityAgainstProjectionPair) {
  Rng rng(4);
  const auto p = random_projection(5, 2, rng);
  const auto d = block_decompose(HermitianMatrix::identity(5), {p, p.complement()});
  EXPECT_MATRIX_NEAR(d.blocks[0][0], CMatrix(CMatrix::Identity(2, 2)), 1e-12);
  EXPECT_MATRIX_NEAR(d.blocks[1][1], CMatrix(CMatrix::Identity(3, 3)), 1e-12);
  EXPECT_LE(d.blocks[0][1].cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_MATRIX_NEAR(d.reassemble(), CMatrix(CMatrix::Identity(5, 5)), 1e-12);
}

TEST(BlockDecompose, DiagonalThreeByThree) {
  const auto d = block_decompose(HermitianMatrix::diagonal({1, 2, 3}),
                                 {diag_projection({1, 1, 0}), diag_projection({0, 0, 1})});
  EXPECT_MATRIX_NEAR(d.blocks[0][0], HermitianMatrix::diagonal({1, 2}).matrix(), 0.0);
  EXPECT_MATRIX_NEAR(d.blocks[1][1], real_matrix(1, 1, {3}), 0.0);
  EXPECT_MATRIX_NEAR(d.blocks[0][1], CMatrix(CMatrix::Zero(2, 1)), 0.0);
}

TEST(BlockDecompose, WorkedPairEntries) {
  const auto d = block_decompose(kWorkedA, {diag_projection({0, 1}), diag_projection({1, 0})});
  EXPECT_NEAR(d.blocks[0][0](0, 0).real(), 0.75, 1e-15);
  EXPECT_NEAR(d.blocks[0][1](0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(d.blocks[1][1](0, 0).real(), 0.25, 1e-15);
  EXPECT_MATRIX_NEAR(d.reassemble(), kWorkedA.matrix(), 1e-15);
}

TEST(BlockDecompose, RejectsNonResolution) {
  try {
    block_decompose(HermitianMatrix::identity(2),
                    {diag_projection({1, 0}), diag_projection({1, 0})});
    FAIL() << "expected NotResolution";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotResolution);
  }
}

TEST(MeetCommuting, Examples) {
  Rng rng(6);
  const auto p = random_projection(4, 2, rng);
  EXPECT_MATRIX_NEAR(meet_commuting(p, p).matrix(), p.matrix(), 1e-12);
  EXPECT_MATRIX_NEAR(meet_commuting(diag_projection({1, 1, 0}), diag_projection({0, 1, 1})).matrix(),
                     HermitianMatrix::diagonal({0, 1, 0}).matrix(), 1e-15);
  EXPECT_EQ(meet_commuting(p, p.complement()).rank(), 0);
}

TEST(MeetCommuting, RejectsNonCommuting) {
  const auto q = ProjectionMatrix::from_matrix(HermitianMatrix::real(2, {0.5, 0.5, 0.5, 0.5}));
  try {
    meet_commuting(diag_projection({1, 0}), q);
    FAIL() << "expected NotCommuting";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
  }
}

TEST(SupportProjections, UnitaryCovariance) {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const Index n = 2 + t;
    RVector values = RVector::Zero(n);
    for (Index k = 0; k < n / 2; ++k) values(k) = rng.uniform(0.1, 1.0);
    const HermitianMatrix x = random_with_spectrum(values, rng);
    const CMatrix U = haar_unitary(n, rng);
    const auto lhs = range_projection(x.conjugated(U)).matrix();
    const CMatrix rhs = U * range_projection(x).matrix() * U.adjoint();
    EXPECT_LE(op_norm(CMatrix(lhs - rhs)), 1e-10);
  }
}

TEST(Strictness, ZeroDimensionalIsStrict) {
  EXPECT_TRUE(is_strict(HermitianMatrix::zero(0)));
}

}  // namespace
}  // namespace abscompat
