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

#pragma once

#include <array>

#include "abscompat/projections.hpp"

namespace abscompat {

/// Defect of |a - b| + |1 - a - b| = 1 in operator norm.
struct CompatibilityReport {
  double residual = 0.0;
  bool verdict = false;
  Tolerance tol_used;
};

/// Operator-norm defects of the four block conditions relating a and b
/// through the witness projection p1 (p2 = 1 - p1, x_ij = p_i x p_j):
///   (i)   a12 + b12 = 0
///   (ii)  a12 a12* = (p1 - a11)(p1 - b11)
///   (iii) a12* a12 = a22 b22 = b22 a22
///   (iv)  a12 = a11 a12 + a12 a22 = b11 a12 + a12 b22
/// (iii) and (iv) report the larger of their two defects.
struct CharacterizationReport {
  std::array<double, 4> residuals{};
  ProjectionMatrix p1 = ProjectionMatrix::zero(0);
  Tolerance tol_used;

  double max_residual() const;
  bool certified() const { return max_residual() <= tol_used.res; }
};

struct OrthogonalityReport {
  bool product_zero = false;
  bool sum_below_one = false;
  bool abs_compat = false;
};

/// Index into the five-projection family, in display order.
enum FiveBlock : std::size_t { kP1 = 0, kP2, kS, kN1, kN2 };

/// a = 1 + a' + a_s + 0 + a'' and b = b' + 1 + b_s + b'' + 0 with respect to
/// the family {p1, p2, s, n1, n2}; the (a_s, b_s) core is strict and
/// compatible. Blocks are restrictions in the range bases of each projection.
struct FiveBlockDecomposition {
  std::array<ProjectionMatrix, 5> family{
      ProjectionMatrix::zero(0), ProjectionMatrix::zero(0),
      ProjectionMatrix::zero(0), ProjectionMatrix::zero(0),
      ProjectionMatrix::zero(0)};
  std::array<CMatrix, 5> bases;
  std::array<CMatrix, 5> a_blocks;
  std::array<CMatrix, 5> b_blocks;
  /// Largest defect over every structural invariant, measured after
  /// construction.
  double max_invariant_residual = 0.0;
  /// Compatibility residual of the strict core (0 when s = 0).
  double core_compat_residual = 0.0;
  Tolerance tol_used;

  const ProjectionMatrix& p1() const { return family[kP1]; }
  const ProjectionMatrix& p2() const { return family[kP2]; }
  const ProjectionMatrix& s() const { return family[kS]; }
  const ProjectionMatrix& n1() const { return family[kN1]; }
  const ProjectionMatrix& n2() const { return family[kN2]; }
};

double compatibility_residual(const HermitianMatrix& a, const HermitianMatrix& b);

CompatibilityReport is_abs_compatible(const UnitIntervalElement& a,
                                      const UnitIntervalElement& b,
                                      const Tolerance& tol = {});

CharacterizationReport check_characterization(const UnitIntervalElement& a,
                                              const UnitIntervalElement& b,
                                              const ProjectionMatrix& p1,
                                              const Tolerance& tol = {});

OrthogonalityReport orthogonality_equivalence(const UnitIntervalElement& a,
                                              const UnitIntervalElement& b,
                                              const Tolerance& tol = {});

/// Splits a compatible pair into its identity, zero and strict parts.
///
/// Projections are assigned greedily from the spectral projections
/// e1 = s(a), e0 = n(a), f1 = s(b), f0 = n(b):
///   p1 = e1, n2 = f0 ^ (1 - p1), p2 = f1 ^ (1 - p1 - n2),
///   n1 = e0 ^ (1 - p1 - n2 - p2), s = the rest.
/// Every invariant is re-verified before returning; failure throws
/// InvariantViolation.
FiveBlockDecomposition five_block_decompose(const UnitIntervalElement& a,
                                            const UnitIntervalElement& b,
                                            const Tolerance& tol = {});

}  // namespace abscompat
