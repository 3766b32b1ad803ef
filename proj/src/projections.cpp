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

#include "abscompat/projections.hpp"

#include <cmath>
#include <sstream>

namespace abscompat {

namespace {

// Projection onto the eigenvectors whose eigenvalue satisfies `keep`.
template <typename Pred>
ProjectionMatrix spectral_window(const SpectralDecomposition& eig, Pred keep) {
  const Index n = eig.eigenvalues.size();
  Index rank = 0;
  for (Index k = 0; k < n; ++k)
    if (keep(eig.eigenvalues(k))) ++rank;
  CMatrix basis(n, rank);
  Index col = 0;
  for (Index k = 0; k < n; ++k)
    if (keep(eig.eigenvalues(k))) basis.col(col++) = eig.eigenvectors.col(k);
  return ProjectionMatrix::from_basis(basis);
}

}  // namespace

ProjectionMatrix ProjectionMatrix::from_matrix(const HermitianMatrix& p,
                                               const Tolerance& tol) {
  const double defect = op_norm(CMatrix(p.matrix() * p.matrix() - p.matrix()));
  if (defect > tol.res) {
    std::ostringstream msg;
    msg << "idempotence defect " << defect << " exceeds tolerance " << tol.res;
    throw Error(ErrorCode::NotProjection, msg.str());
  }
  const double trace = p.matrix().trace().real();
  const Index rank = static_cast<Index>(std::llround(trace));
  const bool degenerate =
      std::abs(trace - static_cast<double>(rank)) >
      static_cast<double>(p.dim()) * tol.eig;
  return ProjectionMatrix(p, rank, degenerate);
}

ProjectionMatrix ProjectionMatrix::from_basis(const CMatrix& basis) {
  return ProjectionMatrix(HermitianMatrix(CMatrix(basis * basis.adjoint())),
                          basis.cols(), false);
}

ProjectionMatrix ProjectionMatrix::zero(Index n) {
  return ProjectionMatrix(HermitianMatrix::zero(n), 0, false);
}

ProjectionMatrix ProjectionMatrix::identity(Index n) {
  return ProjectionMatrix(HermitianMatrix::identity(n), n, false);
}

ProjectionMatrix ProjectionMatrix::complement() const {
  return ProjectionMatrix(HermitianMatrix::identity(dim()) - p_, dim() - rank_,
                          degenerate_);
}

CMatrix ProjectionMatrix::range_basis() const {
  const Index n = dim();
  CMatrix basis(n, rank_);
  CMatrix residual = p_.matrix();
  for (Index k = 0; k < rank_; ++k) {
    Index pivot = 0;
    residual.colwise().norm().maxCoeff(&pivot);
    Eigen::VectorXcd v = residual.col(pivot);
    // Second pass against the accepted vectors keeps orthogonality at
    // roundoff level.
    for (Index j = 0; j < k; ++j) v -= basis.col(j) * basis.col(j).dot(v);
    v.normalize();
    basis.col(k) = v;
    residual -= v * (v.adjoint() * residual);
  }
  return basis;
}

ProjectionMatrix range_projection(const HermitianMatrix& x,
                                  const Tolerance& tol) {
  const SpectralDecomposition eig = spectral_decompose(x);
  if (x.dim() > 0 && eig.eigenvalues(0) < -tol.eig) {
    std::ostringstream msg;
    msg << "range projection of a matrix with eigenvalue " << eig.eigenvalues(0);
    throw Error(ErrorCode::NotPositive, msg.str());
  }
  return spectral_window(eig, [&](double t) { return t > tol.eig; });
}

ProjectionMatrix null_projection(const UnitIntervalElement& x,
                                 const Tolerance& tol) {
  return range_projection(x.hermitian(), tol).complement();
}

ProjectionMatrix one_projection(const UnitIntervalElement& a,
                                const Tolerance& tol) {
  return spectral_window(spectral_decompose(a.hermitian()),
                         [&](double t) { return t > 1.0 - tol.eig; });
}

bool is_strict(const HermitianMatrix& a, const Tolerance& tol) {
  if (a.dim() == 0) return true;
  const RVector ev = spectral_decompose(a).eigenvalues;
  return ev.minCoeff() > tol.eig && ev.maxCoeff() < 1.0 - tol.eig;
}

bool is_strict(const UnitIntervalElement& a, const Tolerance& tol) {
  return is_strict(a.hermitian(), tol);
}

bool commutes(const HermitianMatrix& x, const HermitianMatrix& y,
              const Tolerance& tol) {
  require_same_dim(x.dim(), y.dim(), "commutes");
  return commutator_norm(x.matrix(), y.matrix()) <= tol.res;
}

CMatrix BlockDecomposition::reassemble() const {
  const Index n = family.empty() ? 0 : family.front().dim();
  CMatrix x = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = 0; j < bases.size(); ++j)
      x += bases[i] * blocks[i][j] * bases[j].adjoint();
  return x;
}

void require_resolution(const std::vector<ProjectionMatrix>& family,
                        const Tolerance& tol) {
  if (family.empty()) {
    throw Error(ErrorCode::NotResolution, "empty projection family");
  }
  const Index n = family.front().dim();
  CMatrix sum = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_dim(family[i].dim(), n, "projection family");
    sum += family[i].matrix();
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double overlap =
          op_norm(CMatrix(family[i].matrix() * family[j].matrix()));
      if (overlap > tol.res) {
        std::ostringstream msg;
        msg << "projections " << i << " and " << j
            << " are not orthogonal (|p_i p_j| = " << overlap << ")";
        throw Error(ErrorCode::NotResolution, msg.str());
      }
    }
  }
  const double defect = op_norm(CMatrix(sum - CMatrix::Identity(n, n)));
  if (defect > tol.res) {
    std::ostringstream msg;
    msg << "projections sum to the identity only within " << defect;
    throw Error(ErrorCode::NotResolution, msg.str());
  }
}

BlockDecomposition block_decompose(const HermitianMatrix& x,
                                   const std::vector<ProjectionMatrix>& family,
                                   const Tolerance& tol) {
  require_resolution(family, tol);
  require_same_dim(x.dim(), family.front().dim(), "block_decompose");
  BlockDecomposition out;
  out.family = family;
  for (const auto& p : family) out.bases.push_back(p.range_basis());
  out.blocks.resize(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      out.blocks[i].push_back(out.bases[i].adjoint() * x.matrix() * out.bases[j]);
  return out;
}

ProjectionMatrix meet_commuting(const ProjectionMatrix& p,
                                const ProjectionMatrix& q,
                                const Tolerance& tol) {
  if (!commutes(p.hermitian(), q.hermitian(), tol)) {
    throw Error(ErrorCode::NotCommuting, "meet of non-commuting projections");
  }
  return range_projection(HermitianMatrix(CMatrix(p.matrix() * q.matrix())), tol);
}

}  // namespace abscompat
