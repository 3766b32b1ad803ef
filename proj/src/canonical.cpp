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

#include "abscompat/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace abscompat {

namespace {

CMatrix eye(Index n) { return CMatrix::Identity(n, n); }

CMatrix block2(const CMatrix& tl, const CMatrix& tr, const CMatrix& bl,
               const CMatrix& br) {
  CMatrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  out << tl, tr, bl, br;
  return out;
}

CMatrix matrix_power(const CMatrix& x, int k) {
  CMatrix out = eye(x.rows());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

double unitarity_defect(const CMatrix& U) {
  return std::max(op_norm(CMatrix(U * U.adjoint() - eye(U.rows()))),
                  op_norm(CMatrix(U.adjoint() * U - eye(U.cols()))));
}

double min_eigenvalue(const HermitianMatrix& x) {
  return x.dim() == 0 ? 0.0 : spectral_decompose(x).eigenvalues(0);
}

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Polar decomposition

PolarParts polar_decompose(const CMatrix& x, const Tolerance& tol) {
  if (x.rows() != x.cols()) fail(ErrorCode::NotSquare, "polar_decompose: matrix is not square");
  const Index n = x.rows();
  if (n == 0) return {CMatrix(0, 0), HermitianMatrix::zero(0)};
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& sigma = svd.singularValues();
  Index rank = 0;
  while (rank < n && sigma(rank) > tol.eig) ++rank;
  const CMatrix& W = svd.matrixU();
  const CMatrix& V = svd.matrixV();
  PolarParts parts;
  parts.u = W.leftCols(rank) * V.leftCols(rank).adjoint();
  parts.modulus =
      HermitianMatrix(CMatrix(V * sigma.cast<Complex>().asDiagonal() * V.adjoint()));
  return parts;
}

double PolarIdentityResiduals::max() const {
  return std::max({factorization, adjoint, initial, final_projection, forward,
                   backward});
}

PolarIdentityResiduals polar_identity_residuals(const CMatrix& x,
                                                const PolarParts& parts,
                                                int k_max,
                                                const Tolerance& tol) {
  const CMatrix& u = parts.u;
  const CMatrix& mod = parts.modulus.matrix();
  // |x*| from an independent factorization of x*.
  const CMatrix mod_adj = polar_decompose(x.adjoint(), tol).modulus.matrix();

  PolarIdentityResiduals r;
  r.factorization = op_norm(CMatrix(x - u * mod));
  r.adjoint = op_norm(CMatrix(mod - u.adjoint() * x));
  r.initial = op_norm(CMatrix(range_projection(parts.modulus, tol).matrix() -
                              u.adjoint() * u));
  r.final_projection = op_norm(CMatrix(
      range_projection(HermitianMatrix(mod_adj), tol).matrix() - u * u.adjoint()));
  for (int k = 1; k <= k_max; ++k) {
    const CMatrix mk = matrix_power(mod, k);
    const CMatrix mak = matrix_power(mod_adj, k);
    r.forward = std::max(r.forward, op_norm(CMatrix(mak - u * mk * u.adjoint())));
    r.backward = std::max(r.backward, op_norm(CMatrix(mk - u.adjoint() * mak * u)));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical form of a strict compatible pair

CMatrix CanonicalForm::embedded_u() const {
  return basis_p1 * u * basis_p.adjoint();
}

CMatrix CanonicalForm::model_a() const {
  const Index m = half_dim();
  return block2(a1.matrix(), root.matrix(), root.matrix(), eye(m) - a1.matrix());
}

CMatrix CanonicalForm::model_b() const {
  const Index m = half_dim();
  return block2(b1.matrix(), -root.matrix(), -root.matrix(), eye(m) - b1.matrix());
}

namespace {

void fill_structural_residuals(CanonicalForm& cf) {
  const Index m = cf.half_dim();
  auto& r = cf.residuals;
  r.commutator = commutator_norm(cf.a1.matrix(), cf.b1.matrix());
  r.initial_isometry = op_norm(CMatrix(cf.u.adjoint() * cf.u - eye(m)));
  r.final_isometry = op_norm(CMatrix(cf.u * cf.u.adjoint() - eye(m)));
  r.unitary = unitarity_defect(cf.U);
  const HermitianMatrix slack = HermitianMatrix::identity(m) - cf.a1 - cf.b1;
  r.sum_bound = std::max(0.0, -min_eigenvalue(slack));
}

}  // namespace

CanonicalForm CanonicalForm::assemble(const ProjectionMatrix& p,
                                      const HermitianMatrix& a1,
                                      const HermitianMatrix& b1,
                                      const CMatrix& u, const Tolerance& tol) {
  const Index n = p.dim();
  const Index m = p.rank();
  if (2 * m != n) {
    std::ostringstream msg;
    msg << "rank(p) = " << m << " is not half of " << n;
    fail(ErrorCode::RankMismatch, msg.str());
  }
  require_same_dim(a1.dim(), m, "canonical form a1");
  require_same_dim(b1.dim(), m, "canonical form b1");
  if (u.rows() != m || u.cols() != m) {
    fail(ErrorCode::DimensionMismatch, "canonical form u must be m x m");
  }
  CanonicalForm cf;
  cf.p = p;
  cf.basis_p = p.range_basis();
  cf.basis_p1 = p.complement().range_basis();
  cf.a1 = a1;
  cf.b1 = b1;
  cf.u = u;
  cf.root = sqrt_op(jordan(a1, b1), tol);
  cf.U.resize(2 * m, n);
  cf.U << cf.basis_p.adjoint(), u.adjoint() * cf.basis_p1.adjoint();
  cf.tol_used = tol;
  fill_structural_residuals(cf);
  return cf;
}

CanonicalForm canonical_decompose(const UnitIntervalElement& a,
                                  const UnitIntervalElement& b,
                                  const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "canonical_decompose");
  const Index n = a.dim();

  for (const auto* x : {&a, &b}) {
    const char* name = x == &a ? "a" : "b";
    if (!is_strict(*x, tol)) {
      fail(ErrorCode::NotStrict, std::string(name) + " is not strict");
    }
    const RVector ev = spectral_decompose(x->hermitian()).eigenvalues;
    const double guard = 10.0 * tol.eig;
    if (ev.minCoeff() <= guard || ev.maxCoeff() >= 1.0 - guard) {
      std::ostringstream msg;
      msg << name << " has spectrum [" << ev.minCoeff() << ", " << ev.maxCoeff()
          << "] within " << guard << " of {0, 1}";
      fail(ErrorCode::NearDegenerate, msg.str());
    }
  }
  const CompatibilityReport compat = is_abs_compatible(a, b, tol);
  if (!compat.verdict) {
    std::ostringstream msg;
    msg << "pair is not absolutely compatible (residual " << compat.residual << ")";
    fail(ErrorCode::NotCompatible, msg.str());
  }
  if (n % 2 != 0) fail(ErrorCode::OddDimension, "dimension must be even");

  const ProjectionMatrix p1 = range_projection(jordan(a.hermitian(), b.hermitian()), tol);
  if (2 * p1.rank() != n) {
    std::ostringstream msg;
    msg << "rank(1 - r(a o b)) = " << n - p1.rank() << ", expected " << n / 2;
    fail(ErrorCode::RankMismatch, msg.str());
  }
  const ProjectionMatrix p = p1.complement();
  const CMatrix Qp = p.range_basis();
  const CMatrix Q1 = p1.range_basis();
  const CMatrix& A = a.matrix();
  const CMatrix& B = b.matrix();

  const CMatrix a12 = Q1.adjoint() * A * Qp;
  const PolarParts polar = polar_decompose(a12, tol);

  const HermitianMatrix a1(CMatrix(Qp.adjoint() * A * Qp));
  const HermitianMatrix b1(CMatrix(Qp.adjoint() * B * Qp));
  const double commutator = commutator_norm(a1.matrix(), b1.matrix());
  if (commutator > tol.res) {
    std::ostringstream msg;
    msg << "a1 and b1 do not commute (|[a1,b1]| = " << commutator << ")";
    fail(ErrorCode::InvariantViolation, msg.str());
  }

  CanonicalForm cf = CanonicalForm::assemble(p, a1, b1, polar.u, tol);
  auto& r = cf.residuals;
  if (std::max(r.initial_isometry, r.final_isometry) > tol.res) {
    std::ostringstream msg;
    msg << "off-diagonal block is not injective on pH (|u*u - p| = "
        << r.initial_isometry << ")";
    fail(ErrorCode::InputIntegrity, msg.str());
  }

  r.reconstruction_a =
      op_norm(CMatrix(cf.U.adjoint() * cf.model_a() * cf.U - A));
  r.reconstruction_b =
      op_norm(CMatrix(cf.U.adjoint() * cf.model_b() * cf.U - B));
  const Index m = cf.half_dim();
  const CMatrix a11 = Q1.adjoint() * A * Q1;
  const CMatrix b11 = Q1.adjoint() * B * Q1;
  r.proof_identity_a = op_norm(
      CMatrix(cf.u * cf.a1.matrix() * cf.u.adjoint() - (eye(m) - a11)));
  r.proof_identity_b = op_norm(
      CMatrix(cf.u * cf.b1.matrix() * cf.u.adjoint() - (eye(m) - b11)));

  const double worst =
      std::max({r.reconstruction_a, r.reconstruction_b, r.unitary, r.sum_bound,
                r.proof_identity_a, r.proof_identity_b});
  const bool slack_strict =
      is_strict(HermitianMatrix::identity(m) - cf.a1 - cf.b1, tol);
  if (worst > tol.res || !slack_strict) {
    std::ostringstream msg;
    msg << "canonical form invariants failed (max residual " << worst
        << ", p - a1 - b1 strict: " << (slack_strict ? "yes" : "no") << ")";
    fail(ErrorCode::InvariantViolation, msg.str());
  }
  return cf;
}

std::pair<UnitIntervalElement, UnitIntervalElement> reconstruct_from_canonical(
    const CanonicalForm& cf, const Tolerance& tol) {
  const Index m = cf.half_dim();
  auto reject = [](const std::string& why) {
    fail(ErrorCode::InvariantViolation, "invalid canonical form: " + why);
  };
  if (!in_unit_interval(cf.a1, tol) || !is_strict(cf.a1, tol)) reject("a1 is not strict");
  if (!in_unit_interval(cf.b1, tol) || !is_strict(cf.b1, tol)) reject("b1 is not strict");
  if (commutator_norm(cf.a1.matrix(), cf.b1.matrix()) > tol.res) {
    reject("a1 and b1 do not commute");
  }
  if (!is_strict(HermitianMatrix::identity(m) - cf.a1 - cf.b1, tol)) {
    reject("p - a1 - b1 is not strict");
  }
  if (cf.U.rows() != 2 * m || cf.U.cols() != cf.p.dim() ||
      unitarity_defect(cf.U) > tol.res) {
    reject("U is not a unitary onto K + K");
  }
  HermitianMatrix a(CMatrix(cf.U.adjoint() * cf.model_a() * cf.U));
  HermitianMatrix b(CMatrix(cf.U.adjoint() * cf.model_b() * cf.U));
  return {UnitIntervalElement(std::move(a), tol),
          UnitIntervalElement(std::move(b), tol)};
}

// ---------------------------------------------------------------------------
// Compatible pairs from commuting data

ConstructedPair construct_pair(const UnitIntervalElement& a,
                               const UnitIntervalElement& b,
                               const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "construct_pair");
  const Index n = a.dim();
  if (!is_strict(a, tol)) fail(ErrorCode::NotStrict, "a is not strict");
  if (!is_strict(b, tol)) fail(ErrorCode::NotStrict, "b is not strict");
  if (!commutes(a.hermitian(), b.hermitian(), tol)) {
    std::ostringstream msg;
    msg << "a and b do not commute (|[a,b]| = "
        << commutator_norm(a.matrix(), b.matrix()) << ")";
    fail(ErrorCode::NotCommuting, msg.str());
  }
  const HermitianMatrix a2 = jordan(a.hermitian(), a.hermitian());
  const HermitianMatrix b2 = jordan(b.hermitian(), b.hermitian());
  const HermitianMatrix sum = a2 + b2;
  const double top = n == 0 ? 0.0 : spectral_decompose(sum).eigenvalues.maxCoeff();
  if (top > 1.0 + tol.eig) {
    std::ostringstream msg;
    msg << "a^2 + b^2 has eigenvalue " << top << " > 1";
    fail(ErrorCode::SumBoundViolated, msg.str());
  }
  const HermitianMatrix slack = HermitianMatrix::identity(n) - sum;
  if (!is_strict(slack, tol)) {
    fail(ErrorCode::ComplementNotStrict, "1 - a^2 - b^2 is not strict");
  }
  const CMatrix ab = jordan(a.hermitian(), b.hermitian()).matrix();
  const CMatrix I = eye(n);

  UnitIntervalElement a1(
      HermitianMatrix(block2(a2.matrix(), ab, ab, I - a2.matrix())), tol);
  UnitIntervalElement b1(
      HermitianMatrix(block2(b2.matrix(), -ab, -ab, I - b2.matrix())), tol);

  ConstructionResiduals r;
  r.compatibility = compatibility_residual(a1.hermitian(), b1.hermitian());
  const CMatrix zero = CMatrix::Zero(n, n);
  const CMatrix diag_sum = block2(sum.matrix(), zero, zero, sum.matrix());
  const CMatrix diag_slack = block2(slack.matrix(), zero, zero, slack.matrix());
  r.abs_difference =
      op_norm(CMatrix(abs_op(a1.hermitian() - b1.hermitian()).matrix() - diag_sum));
  r.abs_complement = op_norm(CMatrix(
      abs_op(HermitianMatrix::identity(2 * n) - a1.hermitian() - b1.hermitian())
          .matrix() -
      diag_slack));

  if (!is_strict(a1, tol) || !is_strict(b1, tol) || r.compatibility > tol.res) {
    std::ostringstream msg;
    msg << "constructed pair failed its post-conditions (compatibility residual "
        << r.compatibility << ")";
    fail(ErrorCode::InvariantViolation, msg.str());
  }
  return {std::move(a1), std::move(b1), r};
}

// ---------------------------------------------------------------------------
// Generic pairs of projections

bool generic_position_check(const ProjectionMatrix& P, const ProjectionMatrix& Q,
                            const Tolerance& tol) {
  require_same_dim(P.dim(), Q.dim(), "generic_position_check");
  ProjectionMatrix::from_matrix(P.hermitian(), tol);
  ProjectionMatrix::from_matrix(Q.hermitian(), tol);
  if (P.dim() == 0) return true;
  const RVector sum = spectral_decompose(P.hermitian() + Q.hermitian()).eigenvalues;
  const RVector diff = spectral_decompose(P.hermitian() - Q.hermitian()).eigenvalues;
  for (Index k = 0; k < sum.size(); ++k) {
    if (std::abs(sum(k)) <= tol.eig || std::abs(sum(k) - 2.0) <= tol.eig) return false;
    if (std::abs(diff(k) - 1.0) <= tol.eig || std::abs(diff(k) + 1.0) <= tol.eig) {
      return false;
    }
  }
  return true;
}

GenericPairForm halmos_decompose(const ProjectionMatrix& P,
                                 const ProjectionMatrix& Q,
                                 const Tolerance& tol) {
  if (!generic_position_check(P, Q, tol)) {
    fail(ErrorCode::NotGeneric, "projections are not in generic position");
  }
  const Index n = P.dim();
  if (n % 2 != 0) fail(ErrorCode::OddDimension, "dimension must be even");
  if (2 * P.rank() != n) {
    std::ostringstream msg;
    msg << "rank(P) = " << P.rank() << " is not half of " << n;
    fail(ErrorCode::RankMismatch, msg.str());
  }
  const Index m = n / 2;
  const CMatrix basis = P.range_basis();
  const CMatrix basis_perp = P.complement().range_basis();

  // Compression of Q to K = PH; its spectrum holds the squared cosines of the
  // principal angles.
  const HermitianMatrix A(CMatrix(basis.adjoint() * Q.matrix() * basis));
  const SpectralDecomposition eig = spectral_decompose(A);
  auto clamp01 = [](double t) { return std::clamp(t, 0.0, 1.0); };

  GenericPairForm form;
  form.tol_used = tol;
  form.anchored_cos =
      apply_spectral_function(eig, [&](double t) { return std::sqrt(clamp01(t)); });
  form.anchored_sin = apply_spectral_function(
      eig, [&](double t) { return std::sqrt(1.0 - clamp01(t)); });
  form.C = apply_spectral_function(eig, [&](double t) {
    return std::sqrt((1.0 + std::sqrt(clamp01(t))) / 2.0);
  });
  form.S = apply_spectral_function(eig, [&](double t) {
    return std::sqrt((1.0 - std::sqrt(clamp01(t))) / 2.0);
  });

  // Cross block from (1 - P)H to PH; its polar part identifies the two
  // halves.
  const CMatrix cross = basis.adjoint() * Q.matrix() * basis_perp;
  const CMatrix u = polar_decompose(cross, tol).u;
  form.anchored_U.resize(n, n);
  form.anchored_U << basis.adjoint(), u * basis_perp.adjoint();
  const CMatrix& C = form.C.matrix();
  const CMatrix& S = form.S.matrix();
  const CMatrix W = block2(C, S, S, -C);
  form.U = W * form.anchored_U;

  const CMatrix CS = C * S;
  const CMatrix model_p = block2(C * C, CS, CS, S * S);
  const CMatrix model_q = block2(C * C, -CS, -CS, S * S);
  const CMatrix& c0 = form.anchored_cos.matrix();
  const CMatrix& s0 = form.anchored_sin.matrix();
  const CMatrix zero = CMatrix::Zero(m, m);
  const CMatrix anchored_p = block2(eye(m), zero, zero, zero);
  const CMatrix anchored_q = block2(c0 * c0, c0 * s0, s0 * c0, s0 * s0);

  auto& r = form.residuals;
  const CMatrix& V = form.anchored_U;
  r.reconstruction_p =
      std::max(op_norm(CMatrix(form.U.adjoint() * model_p * form.U - P.matrix())),
               op_norm(CMatrix(V.adjoint() * anchored_p * V - P.matrix())));
  r.reconstruction_q =
      std::max(op_norm(CMatrix(form.U.adjoint() * model_q * form.U - Q.matrix())),
               op_norm(CMatrix(V.adjoint() * anchored_q * V - Q.matrix())));
  r.pythagoras = op_norm(CMatrix(C * C + S * S - eye(m)));
  r.commutator = commutator_norm(C, S);
  r.unitary = std::max(unitarity_defect(form.U), unitarity_defect(V));
  r.resemblance = op_norm(CMatrix(
      CS - sqrt_op(jordan(HermitianMatrix(CMatrix(C * C)),
                          HermitianMatrix(CMatrix(S * S))),
                   tol)
               .matrix()));

  const double worst = std::max({r.reconstruction_p, r.reconstruction_q,
                                 r.pythagoras, r.commutator, r.unitary,
                                 r.resemblance});
  if (worst > tol.res) {
    std::ostringstream msg;
    msg << "generic-pair invariants failed (max residual " << worst << ")";
    fail(ErrorCode::InvariantViolation, msg.str());
  }
  return form;
}

}  // namespace abscompat
