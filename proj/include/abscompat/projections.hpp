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

#include <vector>

#include "abscompat/matrix.hpp"

namespace abscompat {

/// Orthogonal projection: p = p*, p^2 = p.
class ProjectionMatrix {
 public:
  /// Validates idempotence within tol.res and derives the rank from the trace.
  static ProjectionMatrix from_matrix(const HermitianMatrix& p,
                                      const Tolerance& tol = {});
  /// Projection onto the columns of `basis`, which must be orthonormal.
  static ProjectionMatrix from_basis(const CMatrix& basis);
  static ProjectionMatrix zero(Index n);
  static ProjectionMatrix identity(Index n);

  const HermitianMatrix& hermitian() const { return p_; }
  const CMatrix& matrix() const { return p_.matrix(); }
  Index dim() const { return p_.dim(); }
  Index rank() const { return rank_; }
  /// Set when |trace(p) - rank| > n * tol.eig.
  bool degenerate() const { return degenerate_; }

  ProjectionMatrix complement() const;

  /// Orthonormal basis of the range (n x rank), picked deterministically by
  /// pivoted Gram-Schmidt over the columns of p. Coordinate-aligned
  /// projections get standard basis vectors in index order.
  CMatrix range_basis() const;

 private:
  ProjectionMatrix(HermitianMatrix p, Index rank, bool degenerate)
      : p_(std::move(p)), rank_(rank), degenerate_(degenerate) {}

  HermitianMatrix p_;
  Index rank_ = 0;
  bool degenerate_ = false;
};

/// Support projection r(x): eigenvectors with eigenvalue > tol.eig.
ProjectionMatrix range_projection(const HermitianMatrix& x,
                                  const Tolerance& tol = {});
/// n(x) = 1 - r(x).
ProjectionMatrix null_projection(const UnitIntervalElement& x,
                                 const Tolerance& tol = {});
/// s(a): eigenvectors with eigenvalue > 1 - tol.eig.
ProjectionMatrix one_projection(const UnitIntervalElement& a,
                                const Tolerance& tol = {});

/// Spectrum inside (tol.eig, 1 - tol.eig), i.e. s(a) = 0 and n(a) = 0.
bool is_strict(const UnitIntervalElement& a, const Tolerance& tol = {});
bool is_strict(const HermitianMatrix& a, const Tolerance& tol = {});

bool commutes(const HermitianMatrix& x, const HermitianMatrix& y,
              const Tolerance& tol = {});

/// Blocks of x with respect to a resolution of the identity.
///
/// blocks[i][j] is p_i x p_j written in the orthonormal range bases
/// bases[i] (n x rank_i) and bases[j].
struct BlockDecomposition {
  std::vector<ProjectionMatrix> family;
  std::vector<CMatrix> bases;
  std::vector<std::vector<CMatrix>> blocks;

  /// Sum over i, j of bases[i] * blocks[i][j] * bases[j]^*.
  CMatrix reassemble() const;
};

/// Throws NotResolution unless the family is mutually orthogonal and sums to
/// the identity within tol.res.
void require_resolution(const std::vector<ProjectionMatrix>& family,
                        const Tolerance& tol);

BlockDecomposition block_decompose(const HermitianMatrix& x,
                                   const std::vector<ProjectionMatrix>& family,
                                   const Tolerance& tol = {});

/// p AND q for commuting projections, as r(pq).
ProjectionMatrix meet_commuting(const ProjectionMatrix& p,
                                const ProjectionMatrix& q,
                                const Tolerance& tol = {});

}  // namespace abscompat
