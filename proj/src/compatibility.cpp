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

#include "abscompat/compatibility.hpp"

#include <algorithm>
#include <sstream>

namespace abscompat {

double CharacterizationReport::max_residual() const {
  return *std::max_element(residuals.begin(), residuals.end());
}

double compatibility_residual(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "compatibility");
  const auto one = HermitianMatrix::identity(a.dim());
  return op_norm(abs_op(a - b) + abs_op(one - a - b) - one);
}

CompatibilityReport is_abs_compatible(const UnitIntervalElement& a,
                                      const UnitIntervalElement& b,
                                      const Tolerance& tol) {
  CompatibilityReport report;
  report.residual = compatibility_residual(a.hermitian(), b.hermitian());
  report.verdict = report.residual <= tol.res;
  report.tol_used = tol;
  return report;
}

CharacterizationReport check_characterization(const UnitIntervalElement& a,
                                              const UnitIntervalElement& b,
                                              const ProjectionMatrix& p1,
                                              const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "check_characterization");
  require_same_dim(a.dim(), p1.dim(), "check_characterization witness");

  const CMatrix& P1 = p1.matrix();
  const CMatrix P2 = CMatrix::Identity(a.dim(), a.dim()) - P1;
  const CMatrix& A = a.matrix();
  const CMatrix& B = b.matrix();

  const CMatrix a11 = P1 * A * P1, a12 = P1 * A * P2, a22 = P2 * A * P2;
  const CMatrix b11 = P1 * B * P1, b12 = P1 * B * P2, b22 = P2 * B * P2;

  CharacterizationReport report;
  report.p1 = p1;
  report.tol_used = tol;
  report.residuals[0] = op_norm(CMatrix(a12 + b12));
  report.residuals[1] =
      op_norm(CMatrix(a12 * a12.adjoint() - (P1 - a11) * (P1 - b11)));
  const CMatrix gram = a12.adjoint() * a12;
  report.residuals[2] = std::max(op_norm(CMatrix(gram - a22 * b22)),
                                 op_norm(CMatrix(gram - b22 * a22)));
  report.residuals[3] =
      std::max(op_norm(CMatrix(a12 - a11 * a12 - a12 * a22)),
               op_norm(CMatrix(a12 - b11 * a12 - a12 * b22)));
  return report;
}

OrthogonalityReport orthogonality_equivalence(const UnitIntervalElement& a,
                                              const UnitIntervalElement& b,
                                              const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "orthogonality_equivalence");
  OrthogonalityReport report;
  report.product_zero = op_norm(CMatrix(a.matrix() * b.matrix())) <= tol.res;
  const HermitianMatrix sum = a.hermitian() + b.hermitian();
  report.sum_below_one =
      sum.dim() == 0 ||
      spectral_decompose(sum).eigenvalues.maxCoeff() <= 1.0 + tol.eig;
  report.abs_compat = is_abs_compatible(a, b, tol).verdict;
  return report;
}

namespace {

void require_commutes_with(const ProjectionMatrix& e, const char* name,
                           const UnitIntervalElement& a,
                           const UnitIntervalElement& b, const Tolerance& tol) {
  const double da = commutator_norm(e.matrix(), a.matrix());
  const double db = commutator_norm(e.matrix(), b.matrix());
  if (std::max(da, db) > tol.res) {
    std::ostringstream msg;
    msg << "spectral projection " << name
        << " does not commute with the pair (|[e,a]| = " << da
        << ", |[e,b]| = " << db << ")";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
}

ProjectionMatrix rest(const ProjectionMatrix& taken) { return taken.complement(); }

}  // namespace

FiveBlockDecomposition five_block_decompose(const UnitIntervalElement& a,
                                            const UnitIntervalElement& b,
                                            const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "five_block_decompose");
  const Index n = a.dim();
  const CompatibilityReport compat = is_abs_compatible(a, b, tol);
  if (!compat.verdict) {
    std::ostringstream msg;
    msg << "pair is not absolutely compatible (residual " << compat.residual << ")";
    throw Error(ErrorCode::NotCompatible, msg.str());
  }

  const ProjectionMatrix e1 = one_projection(a, tol);
  const ProjectionMatrix e0 = null_projection(a, tol);
  const ProjectionMatrix f1 = one_projection(b, tol);
  const ProjectionMatrix f0 = null_projection(b, tol);
  require_commutes_with(e1, "s(a)", a, b, tol);
  require_commutes_with(e0, "n(a)", a, b, tol);
  require_commutes_with(f1, "s(b)", a, b, tol);
  require_commutes_with(f0, "n(b)", a, b, tol);

  FiveBlockDecomposition out;
  out.tol_used = tol;
  auto& fam = out.family;
  fam[kP1] = e1;
  fam[kN2] = meet_commuting(f0, rest(fam[kP1]), tol);
  fam[kP2] = meet_commuting(
      f1,
      ProjectionMatrix::from_matrix(
          HermitianMatrix(CMatrix(rest(fam[kP1]).matrix() - fam[kN2].matrix())), tol),
      tol);
  const HermitianMatrix taken3(
      CMatrix(fam[kP1].matrix() + fam[kN2].matrix() + fam[kP2].matrix()));
  fam[kN1] = meet_commuting(
      e0,
      ProjectionMatrix::from_matrix(HermitianMatrix::identity(n) - taken3, tol),
      tol);
  // The remainder is taken as a spectral window so that it is an exact
  // projection even when the four meets carry roundoff.
  const HermitianMatrix taken4(CMatrix(taken3.matrix() + fam[kN1].matrix()));
  fam[kS] = range_projection(
      HermitianMatrix(CMatrix(CMatrix::Identity(n, n) - taken4.matrix())),
      Tolerance{0.5, tol.res});

  // Post-conditions.
  double worst = 0.0;
  auto track = [&](double r) { worst = std::max(worst, r); };
  CMatrix sum = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < 5; ++i) {
    sum += fam[i].matrix();
    out.bases[i] = fam[i].range_basis();
    out.a_blocks[i] = out.bases[i].adjoint() * a.matrix() * out.bases[i];
    out.b_blocks[i] = out.bases[i].adjoint() * b.matrix() * out.bases[i];
    for (std::size_t j = i + 1; j < 5; ++j) {
      track(op_norm(CMatrix(fam[i].matrix() * fam[j].matrix())));
      track(op_norm(CMatrix(fam[i].matrix() * a.matrix() * fam[j].matrix())));
      track(op_norm(CMatrix(fam[i].matrix() * b.matrix() * fam[j].matrix())));
    }
  }
  track(op_norm(CMatrix(sum - CMatrix::Identity(n, n))));

  auto eye = [](Index k) { return CMatrix::Identity(k, k); };
  track(op_norm(CMatrix(out.a_blocks[kP1] - eye(fam[kP1].rank()))));
  track(op_norm(out.a_blocks[kN1]));
  track(op_norm(CMatrix(out.b_blocks[kP2] - eye(fam[kP2].rank()))));
  track(op_norm(out.b_blocks[kN2]));
  out.max_invariant_residual = worst;

  bool core_ok = true;
  if (fam[kS].rank() > 0) {
    const HermitianMatrix as(out.a_blocks[kS]);
    const HermitianMatrix bs(out.b_blocks[kS]);
    out.core_compat_residual = compatibility_residual(as, bs);
    core_ok = is_strict(as, tol) && is_strict(bs, tol) &&
              out.core_compat_residual <= tol.res;
  }

  if (worst > tol.res || !core_ok) {
    std::ostringstream msg;
    msg << "five-block post-condition failed (max invariant residual " << worst
        << ", core strict and compatible: " << (core_ok ? "yes" : "no") << ")";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
  return out;
}

}  // namespace abscompat
