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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abscompat/canonical.hpp"
#include "abscompat/compatibility.hpp"
#include "abscompat/error.hpp"
#include "abscompat/generators.hpp"
#include "abscompat/random.hpp"
#include "test_support.hpp"

namespace abscompat {
namespace {

using testing::real_matrix;

const HermitianMatrix kWorkedA = HermitianMatrix::real(2, {0.25, 0.25, 0.25, 0.75});
const HermitianMatrix kWorkedB = HermitianMatrix::real(2, {0.25, -0.25, -0.25, 0.75});

UnitIntervalElement el(const HermitianMatrix& h) { return UnitIntervalElement(h); }

ProjectionMatrix diag_projection(std::initializer_list<double> d) {
  return ProjectionMatrix::from_matrix(HermitianMatrix::diagonal(d));
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

ProjectionMatrix rotated_line(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return ProjectionMatrix::from_matrix(HermitianMatrix::real(2, {c * c, c * s, c * s, s * s}));
}

ProjectionMatrix block_sum(const ProjectionMatrix& x, const ProjectionMatrix& y) {
  CMatrix out = CMatrix::Zero(x.dim() + y.dim(), x.dim() + y.dim());
  out.topLeftCorner(x.dim(), x.dim()) = x.matrix();
  out.bottomRightCorner(y.dim(), y.dim()) = y.matrix();
  return ProjectionMatrix::from_matrix(HermitianMatrix(out));
}

// ---------------------------------------------------------------------------
// Polar decomposition

TEST(Polar, PositiveInput) {
  const HermitianMatrix x = HermitianMatrix::real(2, {0.25, 0.25, 0.25, 0.25});
  const auto parts = polar_decompose(x.matrix());
  EXPECT_MATRIX_NEAR(parts.modulus.matrix(), x.matrix(), 1e-14);
  EXPECT_MATRIX_NEAR(parts.u, range_projection(x).matrix(), 1e-14);
}

TEST(Polar, NilpotentShift) {
  const CMatrix x = real_matrix(2, 2, {0, 0, 1, 0});
  const auto parts = polar_decompose(x);
  EXPECT_MATRIX_NEAR(parts.modulus.matrix(), HermitianMatrix::diagonal({1, 0}).matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(parts.u, x, 1e-15);
  EXPECT_MATRIX_NEAR(CMatrix(parts.u.adjoint() * parts.u),
                     HermitianMatrix::diagonal({1, 0}).matrix(), 1e-15);
  EXPECT_LE(polar_identity_residuals(x, parts).max(), 1e-14);
}

TEST(Polar, UnitaryInput) {
  Rng rng(14);
  const CMatrix U = haar_unitary(4, rng);
  const auto parts = polar_decompose(U);
  EXPECT_MATRIX_NEAR(parts.u, U, 1e-12);
  EXPECT_MATRIX_NEAR(parts.modulus.matrix(), CMatrix(CMatrix::Identity(4, 4)), 1e-12);
}

TEST(Polar, IdentitiesOnRankDeficientInput) {
  Rng rng(15);
  const CMatrix x = gaussian_matrix(6, 3, rng) * gaussian_matrix(3, 6, rng);
  const auto parts = polar_decompose(x);
  EXPECT_LE(polar_identity_residuals(x, parts, 3).max(), 1e-10);
  EXPECT_NEAR(CMatrix(parts.u.adjoint() * parts.u).trace().real(), 3.0, 1e-10);
}

TEST(Polar, RejectsNonSquare) {
  EXPECT_EQ(code_of([] { polar_decompose(CMatrix::Zero(2, 3)); }), ErrorCode::NotSquare);
}

// ---------------------------------------------------------------------------
// Canonical form

TEST(Canonical, WorkedPair) {
  const auto cf = canonical_decompose(el(kWorkedA), el(kWorkedB));
  EXPECT_MATRIX_NEAR(cf.p.matrix(), HermitianMatrix::diagonal({1, 0}).matrix(), 1e-14);
  EXPECT_EQ(cf.half_dim(), 1);
  EXPECT_NEAR(cf.a1.matrix()(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(cf.b1.matrix()(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(std::abs(cf.u(0, 0)), 1.0, 1e-15);
  // u carries e1 onto e2 with coefficient one.
  EXPECT_MATRIX_NEAR(cf.embedded_u(), real_matrix(2, 2, {0, 0, 1, 0}), 1e-15);
  EXPECT_LE(cf.residuals.reconstruction_a, 1e-15);
  EXPECT_LE(cf.residuals.reconstruction_b, 1e-15);
  const auto [a, b] = reconstruct_from_canonical(cf);
  EXPECT_MATRIX_NEAR(a.matrix(), kWorkedA.matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(b.matrix(), kWorkedB.matrix(), 1e-15);
}

TEST(Canonical, ConjugatedWorkedPair) {
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    const CMatrix V = haar_unitary(2, rng);
    const auto cf = canonical_decompose(el(kWorkedA.conjugated(V)), el(kWorkedB.conjugated(V)));
    EXPECT_NEAR(cf.a1.matrix()(0, 0).real(), 0.25, 1e-12);
    EXPECT_NEAR(cf.b1.matrix()(0, 0).real(), 0.25, 1e-12);
    EXPECT_LE(std::max(cf.residuals.reconstruction_a, cf.residuals.reconstruction_b), 1e-7);
  }
}

TEST(Canonical, ElementWithItselfIsRejected) {
  const HermitianMatrix a = HermitianMatrix::diagonal({0.3, 0.6});
  EXPECT_EQ(code_of([&] { canonical_decompose(el(a), el(a)); }), ErrorCode::NotCompatible);
}

TEST(Canonical, NonStrictAndNearDegenerateInputs) {
  const auto edge = el(HermitianMatrix::diagonal({1, 0}));
  EXPECT_EQ(code_of([&] { canonical_decompose(edge, edge); }), ErrorCode::NotStrict);
  const auto close = el(HermitianMatrix::diagonal({5e-8, 0.5}));
  EXPECT_EQ(code_of([&] { canonical_decompose(close, el(kWorkedB)); }),
            ErrorCode::NearDegenerate);
}

TEST(Canonical, ProofIdentityAndDimensionLaw) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorConfig cfg;
    cfg.dim = 1 + static_cast<Index>(seed % 6);
    cfg.seed = seed;
    const auto pair = gen_compatible_pair(cfg);
    const auto cf = canonical_decompose(pair.a, pair.b);
    EXPECT_EQ(2 * cf.p.rank(), pair.a.dim());
    EXPECT_LE(cf.residuals.proof_identity_a, 1e-8);
    EXPECT_LE(cf.residuals.proof_identity_b, 1e-8);
    EXPECT_LE(cf.residuals.commutator, 1e-8);
    EXPECT_TRUE(is_strict(HermitianMatrix::identity(cf.half_dim()) - cf.a1 - cf.b1));
  }
}

TEST(Reconstruct, AssembledScalarForm) {
  const auto cf = CanonicalForm::assemble(diag_projection({1, 0}), HermitianMatrix::diagonal({0.25}),
                                          HermitianMatrix::diagonal({0.25}),
                                          real_matrix(1, 1, {1}));
  const auto [a, b] = reconstruct_from_canonical(cf);
  EXPECT_MATRIX_NEAR(a.matrix(), kWorkedA.matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(b.matrix(), kWorkedB.matrix(), 1e-15);
}

TEST(Reconstruct, RejectsZeroA1) {
  const auto cf = CanonicalForm::assemble(diag_projection({1, 0}), HermitianMatrix::diagonal({0.0}),
                                          HermitianMatrix::diagonal({0.25}),
                                          real_matrix(1, 1, {1}));
  EXPECT_EQ(code_of([&] { reconstruct_from_canonical(cf); }), ErrorCode::InvariantViolation);
}

TEST(Reconstruct, RejectsHalfRankMismatch) {
  EXPECT_EQ(code_of([] {
              CanonicalForm::assemble(diag_projection({1, 1, 0}), HermitianMatrix::diagonal({0.25}),
                                      HermitianMatrix::diagonal({0.25}), real_matrix(1, 1, {1}));
            }),
            ErrorCode::RankMismatch);
}

// ---------------------------------------------------------------------------
// Constructor

TEST(Construct, HalfScalars) {
  const auto half = el(HermitianMatrix::diagonal({0.5}));
  const auto out = construct_pair(half, half);
  EXPECT_MATRIX_NEAR(out.a.matrix(), kWorkedA.matrix(), 1e-15);
  EXPECT_MATRIX_NEAR(out.b.matrix(), kWorkedB.matrix(), 1e-15);
}

TEST(Construct, DiagonalPairMatchesScalarInstances) {
  const auto out = construct_pair(el(HermitianMatrix::diagonal({0.6, 0.3})),
                                  el(HermitianMatrix::diagonal({0.5, 0.4})));
  ASSERT_EQ(out.a.dim(), 4);
  EXPECT_LE(out.residuals.compatibility, 1e-12);
  EXPECT_LE(is_abs_compatible(out.a, out.b).residual, 1e-12);
  // Coordinates (0, 2) form the scalar instance a = 0.6, b = 0.5.
  const double a = 0.6, b = 0.5;
  EXPECT_NEAR(out.a.matrix()(0, 0).real(), a * a, 1e-15);
  EXPECT_NEAR(out.a.matrix()(0, 2).real(), a * b, 1e-15);
  EXPECT_NEAR(out.a.matrix()(2, 2).real(), 1 - a * a, 1e-15);
  EXPECT_NEAR(out.b.matrix()(0, 2).real(), -a * b, 1e-15);
  EXPECT_TRUE(is_strict(out.a));
  EXPECT_TRUE(is_strict(out.b));
}

TEST(Construct, DistinctPreconditionErrors) {
  const auto big = el(HermitianMatrix::diagonal({0.8}));
  EXPECT_EQ(code_of([&] { construct_pair(big, big); }), ErrorCode::SumBoundViolated);
  const auto edge = el(HermitianMatrix::diagonal({1.0, 0.5}));
  const auto mid = el(HermitianMatrix::diagonal({0.3, 0.3}));
  EXPECT_EQ(code_of([&] { construct_pair(edge, mid); }), ErrorCode::NotStrict);
  const auto rotated = el(HermitianMatrix::real(2, {0.4, 0.1, 0.1, 0.3}));
  EXPECT_EQ(code_of([&] { construct_pair(el(HermitianMatrix::diagonal({0.2, 0.4})), rotated); }),
            ErrorCode::NotCommuting);
  const auto root_half = el(HermitianMatrix::diagonal({std::numbers::sqrt2 / 2}));
  EXPECT_EQ(code_of([&] { construct_pair(root_half, root_half); }),
            ErrorCode::ComplementNotStrict);
}

TEST(Construct, ProofIdentities) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig cfg;
    cfg.dim = 1 + static_cast<Index>(seed % 8);
    cfg.seed = seed;
    const auto in = gen_strict_commuting(cfg);
    const auto out = construct_pair(in.a, in.b);
    EXPECT_LE(out.residuals.abs_difference, 1e-10);
    EXPECT_LE(out.residuals.abs_complement, 1e-10);
    EXPECT_LE(out.residuals.compatibility, 1e-10);
  }
}

// ---------------------------------------------------------------------------
// Generic position and the two-projection form

TEST(GenericPosition, Examples) {
  EXPECT_FALSE(generic_position_check(diag_projection({1, 0}), diag_projection({1, 0})));
  EXPECT_TRUE(generic_position_check(diag_projection({1, 0}), rotated_line(std::numbers::pi / 4)));
  EXPECT_FALSE(generic_position_check(diag_projection({1, 0}), diag_projection({0, 1})));
}

TEST(Halmos, QuarterTurn) {
  const double theta = std::numbers::pi / 4;
  const auto g = halmos_decompose(diag_projection({1, 0}), rotated_line(theta));
  ASSERT_EQ(g.C.dim(), 1);
  EXPECT_NEAR(g.anchored_cos.matrix()(0, 0).real(), 1 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(g.anchored_sin.matrix()(0, 0).real(), 1 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(g.C.matrix()(0, 0).real(), std::cos(theta / 2), 1e-15);
  EXPECT_NEAR(g.S.matrix()(0, 0).real(), std::sin(theta / 2), 1e-15);
  EXPECT_LE(g.residuals.reconstruction_p, 1e-14);
  EXPECT_LE(g.residuals.reconstruction_q, 1e-14);
  EXPECT_LE(g.residuals.resemblance, 1e-14);
}

TEST(Halmos, SymmetricFormReconstructsBothProjections) {
  const auto P = diag_projection({1, 0});
  const auto Q = rotated_line(0.3);
  const auto g = halmos_decompose(P, Q);
  const CMatrix C = g.C.matrix(), S = g.S.matrix();
  CMatrix mp(2, 2), mq(2, 2);
  mp << C * C, C * S, C * S, S * S;
  mq << C * C, -C * S, -C * S, S * S;
  EXPECT_MATRIX_NEAR(CMatrix(g.U.adjoint() * mp * g.U), P.matrix(), 1e-14);
  EXPECT_MATRIX_NEAR(CMatrix(g.U.adjoint() * mq * g.U), Q.matrix(), 1e-14);
}

TEST(Halmos, DirectSumRecoversBothAngles) {
  const double t1 = 0.3, t2 = 1.1;
  const auto P = block_sum(diag_projection({1, 0}), diag_projection({1, 0}));
  const auto Q = block_sum(rotated_line(t1), rotated_line(t2));
  const auto g = halmos_decompose(P, Q);
  const RVector cos_values = spectral_decompose(g.anchored_cos).eigenvalues;
  EXPECT_NEAR(cos_values(0), std::cos(t2), 1e-13);
  EXPECT_NEAR(cos_values(1), std::cos(t1), 1e-13);
  EXPECT_LE(g.residuals.pythagoras, 1e-13);
  EXPECT_LE(g.residuals.commutator, 1e-13);
}

TEST(Halmos, RejectsDegeneratePairs) {
  const auto p = diag_projection({1, 0});
  EXPECT_EQ(code_of([&] { halmos_decompose(p, p); }), ErrorCode::NotGeneric);
  EXPECT_EQ(code_of([&] { halmos_decompose(p, p.complement()); }), ErrorCode::NotGeneric);
}

}  // namespace
}  // namespace abscompat
