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

#include "abscompat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace abscompat {

namespace {

CMatrix symmetrize(const CMatrix& m) {
  CMatrix s = (m + m.adjoint()) * 0.5;
  for (Index k = 0; k < s.rows(); ++k) s(k, k) = s(k, k).real();
  return s;
}

}  // namespace

void Tolerance::validate() const {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (!(eig >= eps) || !(res >= eps)) {
    throw Error(ErrorCode::InvalidArgument,
                "tolerances must be at least machine epsilon");
  }
}

HermitianMatrix::HermitianMatrix(const CMatrix& raw) {
  if (raw.rows() != raw.cols()) {
    std::ostringstream msg;
    msg << "matrix is not square (" << raw.rows() << "x" << raw.cols() << ")";
    throw Error(ErrorCode::NotSquare, msg.str());
  }
  m_ = symmetrize(raw);
}

HermitianMatrix HermitianMatrix::checked(const CMatrix& raw,
                                         const Tolerance& tol) {
  HermitianMatrix h(raw);
  h.asymmetry_ = op_norm(CMatrix((raw - raw.adjoint()) * 0.5));
  if (h.asymmetry_ > tol.res) {
    std::ostringstream msg;
    msg << "asymmetry residual " << h.asymmetry_ << " exceeds tolerance "
        << tol.res;
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  return h;
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(CMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Index n) {
  return HermitianMatrix(CMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RVector& values) {
  CMatrix d = CMatrix::Zero(values.size(), values.size());
  d.diagonal() = values.cast<Complex>();
  return HermitianMatrix(d);
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  RVector v(static_cast<Index>(values.size()));
  Index k = 0;
  for (double x : values) v(k++) = x;
  return diagonal(v);
}

HermitianMatrix HermitianMatrix::real(Index n,
                                      std::initializer_list<double> entries) {
  if (static_cast<Index>(entries.size()) != n * n) {
    throw Error(ErrorCode::NotSquare, "expected n*n entries");
  }
  CMatrix m(n, n);
  auto it = entries.begin();
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = *it++;
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  require_same_dim(dim(), other.dim(), "sum");
  return HermitianMatrix(CMatrix(m_ + other.m_));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  require_same_dim(dim(), other.dim(), "difference");
  return HermitianMatrix(CMatrix(m_ - other.m_));
}

HermitianMatrix HermitianMatrix::operator*(double scale) const {
  return HermitianMatrix(CMatrix(m_ * scale));
}

HermitianMatrix HermitianMatrix::operator-() const {
  return HermitianMatrix(CMatrix(-m_));
}

HermitianMatrix HermitianMatrix::conjugated(const CMatrix& u) const {
  if (u.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "conjugation by incompatible matrix");
  }
  return HermitianMatrix(CMatrix(u * m_ * u.adjoint()));
}

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& x) {
  if (x.dim() == 0) return {RVector(0), CMatrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(x.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver did not converge on input:\n" << x.matrix();
    throw Error(ErrorCode::EigenFailure, msg.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix apply_spectral_function(const SpectralDecomposition& eig,
                                        const std::function<double(double)>& f) {
  RVector mapped(eig.eigenvalues.size());
  for (Index k = 0; k < mapped.size(); ++k) mapped(k) = f(eig.eigenvalues(k));
  return HermitianMatrix(CMatrix(eig.eigenvectors *
                                 mapped.cast<Complex>().asDiagonal() *
                                 eig.eigenvectors.adjoint()));
}

HermitianMatrix apply_spectral_function(const HermitianMatrix& x,
                                        const std::function<double(double)>& f) {
  return apply_spectral_function(spectral_decompose(x), f);
}

HermitianMatrix abs_op(const HermitianMatrix& x) {
  return apply_spectral_function(x, [](double t) { return std::abs(t); });
}

HermitianMatrix sqrt_op(const HermitianMatrix& x, const Tolerance& tol) {
  return apply_spectral_function(x, [&](double t) {
    if (t < -tol.eig) {
      std::ostringstream msg;
      msg << "square root of a matrix with eigenvalue " << t;
      throw Error(ErrorCode::NotPositive, msg.str());
    }
    return t <= 0.0 ? 0.0 : std::sqrt(t);
  });
}

HermitianMatrix jordan(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x.dim(), y.dim(), "jordan product");
  const CMatrix xy = x.matrix() * y.matrix();
  const CMatrix yx = y.matrix() * x.matrix();
  return HermitianMatrix(CMatrix((xy + yx) * 0.5));
}

bool in_unit_interval(const HermitianMatrix& x, const Tolerance& tol) {
  if (x.dim() == 0) return true;
  const RVector ev = spectral_decompose(x).eigenvalues;
  return ev.minCoeff() >= -tol.eig && ev.maxCoeff() <= 1.0 + tol.eig;
}

namespace {

double hermitian_spectral_radius(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "eigenvalue iteration did not converge");
  }
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

// Largest singular value, read off the Hermitian dilation [[0, x], [x*, 0]]
// whose eigenvalues are the signed singular values of x.
double op_norm(const CMatrix& x) {
  if (x.size() == 0 || x.isZero(0.0)) return 0.0;
  const Index r = x.rows(), c = x.cols();
  CMatrix dilation = CMatrix::Zero(r + c, r + c);
  dilation.topRightCorner(r, c) = x;
  dilation.bottomLeftCorner(c, r) = x.adjoint();
  return hermitian_spectral_radius(dilation);
}

double op_norm(const HermitianMatrix& x) {
  if (x.dim() == 0) return 0.0;
  return hermitian_spectral_radius(x.matrix());
}

double commutator_norm(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator of mismatched matrices");
  }
  return op_norm(CMatrix(x * y - y * x));
}

void require_same_dim(Index lhs, Index rhs, const char* what) {
  if (lhs != rhs) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << lhs << " vs " << rhs << ")";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

UnitIntervalElement::UnitIntervalElement(HermitianMatrix x,
                                         const Tolerance& tol)
    : x_(std::move(x)) {
  if (!in_unit_interval(x_, tol)) {
    const RVector ev = spectral_decompose(x_).eigenvalues;
    std::ostringstream msg;
    msg << "spectrum [" << ev.minCoeff() << ", " << ev.maxCoeff()
        << "] is not inside [0, 1]";
    throw Error(ErrorCode::OutOfUnitInterval, msg.str());
  }
}

}  // namespace abscompat
