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

#include <complex>
#include <functional>
#include <initializer_list>

#include <Eigen/Dense>

#include "abscompat/error.hpp"

namespace abscompat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical thresholds shared by every operation.
///
/// `eig` classifies eigenvalues (is it 0? is it 1?); `res` bounds the
/// operator-norm defect of an identity. Both are absolute: every element
/// handled here has operator norm at most one.
struct Tolerance {
  double eig = 1e-8;
  double res = 1e-7;

  /// Throws InvalidArgument unless both thresholds are at least machine
  /// epsilon.
  void validate() const;
};

/// Complex self-adjoint matrix.
///
/// Construction symmetrizes the input to (x + x*)/2, so the stored entries
/// satisfy m(j,k) == conj(m(k,j)) exactly. `checked` additionally measures
/// the asymmetry of the raw input (operator norm of (x - x*)/2) and keeps it
/// for diagnostics.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& raw);

  /// Like the constructor, but rejects inputs whose asymmetry exceeds
  /// tol.res.
  static HermitianMatrix checked(const CMatrix& raw, const Tolerance& tol);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix diagonal(const RVector& values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);
  /// Row-major real entries, n*n of them.
  static HermitianMatrix real(Index n, std::initializer_list<double> entries);

  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  double asymmetry() const { return asymmetry_; }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double scale) const;
  HermitianMatrix operator-() const;

  /// Conjugation u x u*; u may be rectangular.
  HermitianMatrix conjugated(const CMatrix& u) const;

 private:
  CMatrix m_;
  double asymmetry_ = 0.0;
};

struct SpectralDecomposition {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors;  // columns, unitary

  CMatrix reconstruct() const;
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& x);

/// V diag(f(lambda)) V*. `f` may throw Error(DomainError).
HermitianMatrix apply_spectral_function(const HermitianMatrix& x,
                                        const std::function<double(double)>& f);
HermitianMatrix apply_spectral_function(const SpectralDecomposition& eig,
                                        const std::function<double(double)>& f);

HermitianMatrix abs_op(const HermitianMatrix& x);

/// Square root of a positive semidefinite matrix. Eigenvalues in
/// [-tol.eig, 0) are clamped to zero; anything more negative is rejected.
HermitianMatrix sqrt_op(const HermitianMatrix& x, const Tolerance& tol = {});

/// Jordan product (xy + yx)/2.
HermitianMatrix jordan(const HermitianMatrix& x, const HermitianMatrix& y);

bool in_unit_interval(const HermitianMatrix& x, const Tolerance& tol = {});

/// Largest singular value.
double op_norm(const CMatrix& x);
/// Largest absolute eigenvalue (same as op_norm for self-adjoint input).
double op_norm(const HermitianMatrix& x);

double commutator_norm(const CMatrix& x, const CMatrix& y);

/// Throws DimensionMismatch when the two dimensions differ.
void require_same_dim(Index lhs, Index rhs, const char* what);

/// A Hermitian matrix certified to satisfy 0 <= x <= 1 (up to tol.eig).
class UnitIntervalElement {
 public:
  UnitIntervalElement(HermitianMatrix x, const Tolerance& tol = {});

  const HermitianMatrix& hermitian() const { return x_; }
  const CMatrix& matrix() const { return x_.matrix(); }
  Index dim() const { return x_.dim(); }

 private:
  HermitianMatrix x_;
};

}  // namespace abscompat
