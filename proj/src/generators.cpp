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

#include "abscompat/generators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "abscompat/canonical.hpp"
#include "abscompat/compatibility.hpp"

namespace abscompat {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

CMatrix direct_sum(const std::vector<CMatrix>& parts) {
  Index n = 0;
  for (const auto& p : parts) n += p.rows();
  CMatrix out = CMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& p : parts) {
    out.block(at, at, p.rows(), p.cols()) = p;
    at += p.rows();
  }
  return out;
}

CMatrix diagonal_of(const std::vector<double>& v) {
  CMatrix d = CMatrix::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) d(static_cast<Index>(k), static_cast<Index>(k)) = v[k];
  return d;
}

RVector uniform_vector(Index n, double lo, double hi, Rng& rng) {
  RVector v(n);
  for (Index k = 0; k < n; ++k) v(k) = rng.uniform(lo, hi);
  return v;
}

}  // namespace

std::optional<GeneratorKind> parse_kind(std::string_view name) {
  if (name == "strict") return GeneratorKind::Strict;
  if (name == "strict-commuting") return GeneratorKind::StrictCommuting;
  if (name == "compatible-pair") return GeneratorKind::CompatiblePair;
  if (name == "generic-projections") return GeneratorKind::GenericProjections;
  if (name == "arbitrary-unit-interval") return GeneratorKind::ArbitraryUnitInterval;
  return std::nullopt;
}

std::string_view kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Strict: return "strict";
    case GeneratorKind::StrictCommuting: return "strict-commuting";
    case GeneratorKind::CompatiblePair: return "compatible-pair";
    case GeneratorKind::GenericProjections: return "generic-projections";
    case GeneratorKind::ArbitraryUnitInterval: return "arbitrary-unit-interval";
  }
  return "unknown";
}

void GeneratorConfig::validate() const {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dim must be at least 1");
  if (!(margin > 0.0 && margin < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "margin must lie in (0, 0.5)");
  }
  if (kind == GeneratorKind::GenericProjections && dim % 2 != 0) {
    throw Error(ErrorCode::OddDimension,
                "generic projections need an even dimension");
  }
  if (fixed_angle && !(*fixed_angle > 0.0 && *fixed_angle < kHalfPi)) {
    throw Error(ErrorCode::InvalidArgument, "fixed angle must lie in (0, pi/2)");
  }
}

HermitianMatrix random_with_spectrum(const RVector& values, Rng& rng) {
  const CMatrix V = haar_unitary(values.size(), rng);
  return HermitianMatrix(
      CMatrix(V * values.cast<Complex>().asDiagonal() * V.adjoint()));
}

HermitianMatrix random_unit_interval(Index n, Rng& rng, double margin) {
  return random_with_spectrum(uniform_vector(n, margin, 1.0 - margin, rng), rng);
}

ProjectionMatrix random_projection(Index n, Index rank, Rng& rng) {
  const CMatrix V = haar_unitary(n, rng);
  return ProjectionMatrix::from_basis(V.leftCols(rank));
}

ProjectionMatrix random_projection(Index n, Rng& rng) {
  const Index rank =
      n >= 2 ? 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)))
             : static_cast<Index>(rng.below(2));
  return random_projection(n, rank, rng);
}

ElementPair gen_strict(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  HermitianMatrix a = random_unit_interval(cfg.dim, rng, cfg.margin);
  HermitianMatrix b = random_unit_interval(cfg.dim, rng, cfg.margin);
  return {UnitIntervalElement(std::move(a)), UnitIntervalElement(std::move(b))};
}

ElementPair gen_strict_commuting(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const double m = cfg.margin;
  // When sqrt(2) m < 1 - m both coordinates can be kept at least m away from
  // zero; otherwise fall back to the weaker m^2 guarantee.
  const bool wide = std::numbers::sqrt2 * m < 1.0 - m;
  const double r_lo = wide ? std::numbers::sqrt2 * m : m;
  const double r_hi = 1.0 - m;
  RVector alpha(cfg.dim), beta(cfg.dim);
  for (Index k = 0; k < cfg.dim; ++k) {
    double r = rng.uniform(r_lo, r_hi);
    if (r <= r_lo) r = 0.5 * (r_lo + r_hi);
    const double delta = wide ? std::asin(m / r) : std::asin(m);
    double theta = rng.uniform(delta, kHalfPi - delta);
    if (theta <= delta) theta = std::numbers::pi / 4.0;
    alpha(k) = r * std::cos(theta);
    beta(k) = r * std::sin(theta);
  }
  const CMatrix V = haar_unitary(cfg.dim, rng);
  auto embed = [&](const RVector& v) {
    return HermitianMatrix(CMatrix(V * v.cast<Complex>().asDiagonal() * V.adjoint()));
  };
  return {UnitIntervalElement(embed(alpha)), UnitIntervalElement(embed(beta))};
}

ElementPair gen_compatible_pair(const GeneratorConfig& cfg) {
  cfg.validate();
  GeneratorConfig core_cfg = cfg;
  core_cfg.kind = GeneratorKind::StrictCommuting;
  const ElementPair commuting = gen_strict_commuting(core_cfg);
  const ConstructedPair core = construct_pair(commuting.a, commuting.b);

  Rng rng(derive_seed(cfg.seed, "compatible-pair", 0));
  std::vector<CMatrix> a_parts, b_parts;
  auto pad = [&](Index count, auto a_value, auto b_value) {
    std::vector<double> av, bv;
    for (Index k = 0; k < count; ++k) {
      av.push_back(a_value());
      bv.push_back(b_value());
    }
    a_parts.push_back(diagonal_of(av));
    b_parts.push_back(diagonal_of(bv));
  };
  auto one = [] { return 1.0; };
  auto zero = [] { return 0.0; };
  auto free = [&] { return rng.uniform(cfg.margin, 1.0 - cfg.margin); };

  Index counts[4] = {0, 0, 0, 0};  // p1, p2, n1, n2
  if (cfg.padding == Padding::P1Only) counts[0] = 1;
  if (cfg.padding == Padding::Full) {
    for (auto& c : counts) c = static_cast<Index>(rng.below(3));
  }
  pad(counts[0], one, free);
  pad(counts[1], free, one);
  a_parts.push_back(core.a.matrix());
  b_parts.push_back(core.b.matrix());
  pad(counts[2], zero, free);
  pad(counts[3], free, zero);

  const CMatrix A = direct_sum(a_parts);
  const CMatrix B = direct_sum(b_parts);
  const CMatrix W = haar_unitary(A.rows(), rng);
  UnitIntervalElement a(HermitianMatrix(CMatrix(W * A * W.adjoint())));
  UnitIntervalElement b(HermitianMatrix(CMatrix(W * B * W.adjoint())));
  const CompatibilityReport report = is_abs_compatible(a, b);
  if (!report.verdict) {
    std::ostringstream msg;
    msg << "generated pair failed certification (residual " << report.residual << ")";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
  return {std::move(a), std::move(b)};
}

ProjectionPair gen_generic_projections(const GeneratorConfig& cfg) {
  GeneratorConfig checked = cfg;
  checked.kind = GeneratorKind::GenericProjections;
  checked.validate();
  Rng rng(cfg.seed);
  const Index m = cfg.dim / 2;
  const double delta = std::asin(cfg.margin);
  RVector c(m), s(m);
  for (Index k = 0; k < m; ++k) {
    double theta = cfg.fixed_angle ? *cfg.fixed_angle
                                   : rng.uniform(delta, kHalfPi - delta);
    if (theta <= delta) theta = std::numbers::pi / 4.0;
    c(k) = std::cos(theta);
    s(k) = std::sin(theta);
  }
  const CMatrix U = haar_unitary(cfg.dim, rng);
  // Exact projections: built from orthonormal bases of the conjugated models.
  CMatrix q_basis(cfg.dim, m);
  for (Index k = 0; k < m; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cfg.dim);
    v(k) = c(k);
    v(m + k) = s(k);
    q_basis.col(k) = U.adjoint() * v;
  }
  ProjectionPair out{ProjectionMatrix::from_basis(U.adjoint().leftCols(m)),
                     ProjectionMatrix::from_basis(q_basis)};
  if (!generic_position_check(out.p, out.q)) {
    throw Error(ErrorCode::InvariantViolation,
                "generated projections failed the generic-position check");
  }
  return out;
}

ElementPair gen_unit_interval(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  HermitianMatrix a = random_unit_interval(cfg.dim, rng);
  HermitianMatrix b = random_unit_interval(cfg.dim, rng);
  return {UnitIntervalElement(std::move(a)), UnitIntervalElement(std::move(b))};
}

}  // namespace abscompat
