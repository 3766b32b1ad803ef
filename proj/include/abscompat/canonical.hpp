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

#include <utility>

#include "abscompat/compatibility.hpp"

namespace abscompat {

/// x = u |x| with |x| = (x* x)^{1/2} and u a partial isometry from r(|x|)H
/// onto r(|x*|)H.
struct PolarParts {
  CMatrix u;
  HermitianMatrix modulus;
};

/// Singular values at or below tol.eig are treated as zero when forming u.
PolarParts polar_decompose(const CMatrix& x, const Tolerance& tol = {});

/// Defects of the standard polar identities, each maximised over k = 1..k_max:
///   modulus:  x = u|x|
///   adjoint:  |x| = u* x
///   initial:  r(|x|) = u* u
///   final:    r(|x*|) = u u*
///   forward:  |x*|^k = u |x|^k u*
///   backward: |x|^k = u* |x*|^k u
struct PolarIdentityResiduals {
  double factorization = 0.0;
  double adjoint = 0.0;
  double initial = 0.0;
  double final_projection = 0.0;
  double forward = 0.0;
  double backward = 0.0;

  double max() const;
};

PolarIdentityResiduals polar_identity_residuals(const CMatrix& x,
                                                const PolarParts& parts,
                                                int k_max = 3,
                                                const Tolerance& tol = {});

/// Defects measured on a CanonicalForm after construction.
struct CanonicalResiduals {
  double reconstruction_a = 0.0;
  double reconstruction_b = 0.0;
  double commutator = 0.0;        // |a1 b1 - b1 a1|
  double initial_isometry = 0.0;  // |u*u - p| (in K coordinates: |u*u - 1|)
  double final_isometry = 0.0;    // |uu* - (1 - p)|
  double unitary = 0.0;           // |U*U - 1| and |UU* - 1|
  double sum_bound = 0.0;         // max(0, -lambda_min(p - a1 - b1))
  double proof_identity_a = 0.0;  // |u a22 u* - (p1 - a11)|
  double proof_identity_b = 0.0;  // |u b22 u* - (p1 - b11)|
};

/// Canonical form of a strict absolutely compatible pair on H = K + K with
/// K = pH:
///   a = U* [[a1, (a1 b1)^{1/2}], [(a1 b1)^{1/2}, 1 - a1]] U
///   b = U* [[b1, -(a1 b1)^{1/2}], [-(a1 b1)^{1/2}, 1 - b1]] U
/// a1, b1 and u are expressed in the orthonormal basis `basis_p` of pH; u
/// maps pH onto (1 - p)H, whose basis is `basis_p1`. U has 2m rows (the two
/// copies of K) and n columns: U h = (basis_p* h, u* basis_p1* h).
struct CanonicalForm {
  ProjectionMatrix p = ProjectionMatrix::zero(0);
  CMatrix basis_p;
  CMatrix basis_p1;
  HermitianMatrix a1;
  HermitianMatrix b1;
  HermitianMatrix root;  // (a1 b1)^{1/2}
  CMatrix u;
  CMatrix U;
  CanonicalResiduals residuals;
  Tolerance tol_used;

  Index half_dim() const { return a1.dim(); }
  /// u as an n x n partial isometry with initial space pH and final space
  /// (1 - p)H.
  CMatrix embedded_u() const;
  /// Left and right 2m x 2m model matrices conjugated by U.
  CMatrix model_a() const;
  CMatrix model_b() const;

  /// Builds a form from its free data: the projection p, the commuting pair
  /// (a1, b1) on pH and the isometry u (m x m, pH coordinates to (1-p)H
  /// coordinates). Validates nothing beyond dimensions.
  static CanonicalForm assemble(const ProjectionMatrix& p,
                                const HermitianMatrix& a1,
                                const HermitianMatrix& b1, const CMatrix& u,
                                const Tolerance& tol = {});
};

/// p = 1 - r(a o b), a1 = p a p, b1 = p b p, u from the polar decomposition
/// of the off-diagonal block (1 - p) a p. Requires a and b strict (and at
/// least 10 tol.eig away from 0 and 1), compatible, with n even.
CanonicalForm canonical_decompose(const UnitIntervalElement& a,
                                  const UnitIntervalElement& b,
                                  const Tolerance& tol = {});

std::pair<UnitIntervalElement, UnitIntervalElement> reconstruct_from_canonical(
    const CanonicalForm& cf, const Tolerance& tol = {});

struct ConstructionResiduals {
  double compatibility = 0.0;
  double abs_difference = 0.0;  // |a1 - b1| = diag(a^2 + b^2, a^2 + b^2)
  double abs_complement = 0.0;  // |1 - a1 - b1| = diag(c, c), c = 1 - a^2 - b^2
};

struct ConstructedPair {
  UnitIntervalElement a;
  UnitIntervalElement b;
  ConstructionResiduals residuals;
};

/// From a strict commuting pair with a^2 + b^2 <= 1 and 1 - a^2 - b^2
/// strict, builds the compatible pair on the doubled space
///   a1 = [[a^2, ab], [ab, 1 - a^2]],  b1 = [[b^2, -ab], [-ab, 1 - b^2]].
ConstructedPair construct_pair(const UnitIntervalElement& a,
                               const UnitIntervalElement& b,
                               const Tolerance& tol = {});

/// True iff the ranges M, N of P, Q satisfy M^N = M^N' = M'^N = M'^N' = 0.
bool generic_position_check(const ProjectionMatrix& P, const ProjectionMatrix& Q,
                            const Tolerance& tol = {});

struct GenericPairResiduals {
  double reconstruction_p = 0.0;
  double reconstruction_q = 0.0;
  double pythagoras = 0.0;   // |C^2 + S^2 - 1|
  double commutator = 0.0;   // |CS - SC|
  double unitary = 0.0;
  double resemblance = 0.0;  // |CS - (C^2 S^2)^{1/2}|
};

/// Generic pair P, Q in the symmetric form
///   P = U* [[C^2, CS], [CS, S^2]] U,  Q = U* [[C^2, -CS], [-CS, S^2]] U.
/// The P-anchored form P = V* [[1, 0], [0, 0]] V,
/// Q = V* [[c^2, cs], [cs, s^2]] V is kept alongside; C and S are the
/// half-angle versions of c and s.
struct GenericPairForm {
  HermitianMatrix C;
  HermitianMatrix S;
  CMatrix U;
  HermitianMatrix anchored_cos;
  HermitianMatrix anchored_sin;
  CMatrix anchored_U;
  GenericPairResiduals residuals;
  Tolerance tol_used;
};

GenericPairForm halmos_decompose(const ProjectionMatrix& P,
                                 const ProjectionMatrix& Q,
                                 const Tolerance& tol = {});

}  // namespace abscompat
