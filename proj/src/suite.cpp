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

#include "abscompat/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "abscompat/canonical.hpp"
#include "abscompat/generators.hpp"

namespace abscompat {

namespace {

TrialOutcome below(double residual, double threshold) {
  return TrialOutcome{residual <= threshold, residual};
}

TrialOutcome holds(bool ok) { return {ok, ok ? 0.0 : 1.0}; }

HermitianMatrix random_hermitian(Index n, Rng& rng) {
  return random_with_spectrum(
      RVector::NullaryExpr(n, [&](Index) { return rng.uniform(-1.0, 1.0); }), rng);
}

/// Spectrum uniform on [0, 1] with one eigenvalue forced to 0 or 1 (or
/// neither), chosen by `kind` in {0, 1, 2}.
HermitianMatrix planted_unit_interval(Index n, Rng& rng, int kind) {
  RVector ev = RVector::NullaryExpr(n, [&](Index) { return rng.uniform(0.05, 0.95); });
  if (kind == 0) ev(0) = 0.0;
  if (kind == 1) ev(n - 1) = 1.0;
  return random_with_spectrum(ev, rng);
}

GeneratorConfig config(GeneratorKind kind, Index dim, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.kind = kind;
  cfg.dim = dim;
  cfg.seed = seed;
  return cfg;
}

CMatrix direct_sum(const CMatrix& x, const CMatrix& y) {
  CMatrix out = CMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

// exp(i eps H) for a random Hermitian H of unit norm.
CMatrix small_rotation(Index n, double eps, Rng& rng) {
  const SpectralDecomposition h = spectral_decompose(random_hermitian(n, rng));
  Eigen::VectorXcd phases(n);
  for (Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, eps * h.eigenvalues(k));
  return h.eigenvectors * phases.asDiagonal() * h.eigenvectors.adjoint();
}

using Run = std::function<TrialOutcome(std::uint64_t, Index, const Tolerance&)>;

}  // namespace

std::vector<Property> default_properties() {
  std::vector<Property> props;
  auto add = [&](std::string name, double tolerance, Run run) {
    props.push_back({std::move(name), tolerance, std::move(run)});
  };
  const double res = Tolerance{}.res;

  // --- spectral calculus ---------------------------------------------------
  add("functional_calculus_homomorphism", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const SpectralDecomposition eig = spectral_decompose(random_hermitian(n, rng));
    auto f = [](double t) { return 1.0 + 2.0 * t - t * t; };
    auto g = [](double t) { return t * t * t - 0.5; };
    const CMatrix fg = apply_spectral_function(eig, [&](double t) { return f(t) * g(t); }).matrix();
    const CMatrix prod = apply_spectral_function(eig, f).matrix() *
                         apply_spectral_function(eig, g).matrix();
    return below(op_norm(CMatrix(fg - prod)), tol.res);
  });
  add("abs_squared_equals_square", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix x = random_hermitian(n, rng);
    const CMatrix ax = abs_op(x).matrix();
    return below(op_norm(CMatrix(ax * ax - x.matrix() * x.matrix())), tol.res);
  });
  add("sqrt_squared_equals_input", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix x = random_unit_interval(n, rng);
    const CMatrix r = sqrt_op(x, tol).matrix();
    return below(op_norm(CMatrix(r * r - x.matrix())), tol.res);
  });
  add("abs_unitary_covariance", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix x = random_hermitian(n, rng);
    const CMatrix U = haar_unitary(n, rng);
    const CMatrix lhs = abs_op(x.conjugated(U)).matrix();
    const CMatrix rhs = U * abs_op(x).matrix() * U.adjoint();
    return below(op_norm(CMatrix(lhs - rhs)), tol.res);
  });
  add("jordan_product_symmetric", 0.0, [](auto seed, Index n, const auto&) {
    Rng rng(seed);
    const HermitianMatrix x = random_hermitian(n, rng);
    const HermitianMatrix y = random_hermitian(n, rng);
    const double diff =
        (jordan(x, y).matrix() - jordan(y, x).matrix()).cwiseAbs().maxCoeff();
    return below(diff, 0.0);
  });

  // --- projections and strictness --------------------------------------------
  add("diagonal_blocks_of_strict_are_strict", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    n = std::max<Index>(n, 2);
    const HermitianMatrix a = random_unit_interval(n, rng, 0.05);
    const ProjectionMatrix p = random_projection(n, rng);
    const BlockDecomposition blocks = block_decompose(a, {p, p.complement()}, tol);
    return holds(is_strict(HermitianMatrix(blocks.blocks[0][0]), tol) &&
                 is_strict(HermitianMatrix(blocks.blocks[1][1]), tol));
  });
  add("strict_is_injective", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix a = random_unit_interval(n, rng, 0.05);
    const double lmin = spectral_decompose(a).eigenvalues(0);
    const CMatrix x = gaussian_matrix(n, n, rng);
    // |a x| >= lambda_min |x| in operator norm.
    Eigen::JacobiSVD<CMatrix> ax(a.matrix() * x);
    Eigen::JacobiSVD<CMatrix> sx(x);
    const double shortfall = std::max(
        0.0, lmin * sx.singularValues()(n - 1) - ax.singularValues()(n - 1) - 1e-12);
    return TrialOutcome{is_strict(a, tol) && lmin > tol.eig && shortfall == 0.0, shortfall};
  });
  add("sqrt_preserves_strict", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix a = random_unit_interval(n, rng, 0.05);
    return holds(is_strict(a, tol) && is_strict(sqrt_op(a, tol), tol));
  });
  add("commuting_product_preserves_strict", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const CMatrix V = haar_unitary(n, rng);
    auto with_basis = [&] {
      RVector ev = RVector::NullaryExpr(n, [&](Index) { return rng.uniform(0.05, 0.95); });
      return HermitianMatrix(CMatrix(V * ev.cast<Complex>().asDiagonal() * V.adjoint()));
    };
    const HermitianMatrix a = with_basis();
    const HermitianMatrix b = with_basis();
    return holds(commutes(a, b, tol) && is_strict(jordan(a, b), tol));
  });
  add("strict_iff_square_strict", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix a =
        planted_unit_interval(n, rng, static_cast<int>(seed % 3));
    return holds(is_strict(a, tol) == is_strict(jordan(a, a), tol));
  });
  add("support_projections_unitary_covariance", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const UnitIntervalElement x(planted_unit_interval(n, rng, static_cast<int>(seed % 3)), tol);
    const CMatrix U = haar_unitary(n, rng);
    const UnitIntervalElement ux(x.hermitian().conjugated(U), tol);
    auto gap = [&](const ProjectionMatrix& lhs, const ProjectionMatrix& rhs) {
      return op_norm(CMatrix(lhs.matrix() - U * rhs.matrix() * U.adjoint()));
    };
    const double worst = std::max(
        {gap(range_projection(ux.hermitian(), tol), range_projection(x.hermitian(), tol)),
         gap(null_projection(ux, tol), null_projection(x, tol)),
         gap(one_projection(ux, tol), one_projection(x, tol))});
    return below(worst, tol.res);
  });
  add("range_projection_idempotent", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const HermitianMatrix x = planted_unit_interval(n, rng, 0);
    const ProjectionMatrix r = range_projection(x, tol);
    const ProjectionMatrix rr = range_projection(r.hermitian(), tol);
    return below(op_norm(CMatrix(rr.matrix() - r.matrix())), tol.res);
  });

  // --- compatibility ----------------------------------------------------------
  add("compatibility_unitary_invariance", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const ElementPair pair =
        seed % 2 == 0 ? gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed))
                      : gen_unit_interval(config(GeneratorKind::ArbitraryUnitInterval, n, seed));
    const CMatrix U = haar_unitary(pair.a.dim(), rng);
    const UnitIntervalElement ua(pair.a.hermitian().conjugated(U), tol);
    const UnitIntervalElement ub(pair.b.hermitian().conjugated(U), tol);
    return holds(is_abs_compatible(pair.a, pair.b, tol).verdict ==
                 is_abs_compatible(ua, ub, tol).verdict);
  });
  add("projection_compatible_iff_commuting", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    n = std::max<Index>(n, 2);
    const ProjectionMatrix p = random_projection(n, rng);
    HermitianMatrix a = random_unit_interval(n, rng);
    if (seed % 2 == 0) {
      // Compress to the commutant of p.
      const CMatrix P = p.matrix();
      const CMatrix Pc = CMatrix::Identity(n, n) - P;
      a = HermitianMatrix(CMatrix(P * a.matrix() * P + Pc * a.matrix() * Pc));
    }
    const UnitIntervalElement ea(a, tol);
    const UnitIntervalElement ep(p.hermitian(), tol);
    return holds(is_abs_compatible(ea, ep, tol).verdict == commutes(a, p.hermitian(), tol));
  });
  add("characterization_witness", res, [](auto seed, Index n, const auto& tol) {
    const ElementPair pair = gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed));
    const ProjectionMatrix p1 =
        range_projection(jordan(pair.a.hermitian(), pair.b.hermitian()), tol);
    const CharacterizationReport report = check_characterization(pair.a, pair.b, p1, tol);
    return TrialOutcome{report.certified() && is_abs_compatible(pair.a, pair.b, tol).verdict,
            report.max_residual()};
  });
  add("perturbation_breaks_characterization", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(derive_seed(seed, "perturbation", 0));
    const ElementPair pair = gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed));
    const ProjectionMatrix p1 =
        range_projection(jordan(pair.a.hermitian(), pair.b.hermitian()), tol);
    const CMatrix V = small_rotation(pair.b.dim(), 1e-3, rng);
    const UnitIntervalElement moved(pair.b.hermitian().conjugated(V), tol);
    const CharacterizationReport report = check_characterization(pair.a, moved, p1, tol);
    return TrialOutcome{!report.certified(), report.max_residual()};
  });
  add("direct_sum_closure", res, [](auto seed, Index n, const auto& tol) {
    const ElementPair x = gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed));
    const ElementPair y = gen_compatible_pair(
        config(GeneratorKind::CompatiblePair, 1 + static_cast<Index>(seed % 3), ~seed));
    const UnitIntervalElement a(HermitianMatrix(direct_sum(x.a.matrix(), y.a.matrix())), tol);
    const UnitIntervalElement b(HermitianMatrix(direct_sum(x.b.matrix(), y.b.matrix())), tol);
    const CompatibilityReport report = is_abs_compatible(a, b, tol);
    return TrialOutcome{report.verdict, report.residual};
  });
  add("orthogonality_equivalence", 0.0, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    HermitianMatrix a, b;
    switch (seed % 4) {
      case 0: {  // orthogonal supports
        const Index k = n >= 2 ? 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1))) : 1;
        const CMatrix V = haar_unitary(std::max<Index>(n, 2), rng);
        const Index dim = V.rows();
        RVector ea = RVector::Zero(dim), eb = RVector::Zero(dim);
        for (Index i = 0; i < dim; ++i) (i < k ? ea : eb)(i) = rng.uniform(0.0, 1.0);
        a = HermitianMatrix(CMatrix(V * ea.cast<Complex>().asDiagonal() * V.adjoint()));
        b = HermitianMatrix(CMatrix(V * eb.cast<Complex>().asDiagonal() * V.adjoint()));
        break;
      }
      case 1: {  // compatible but overlapping
        const ElementPair pair = gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed));
        a = pair.a.hermitian();
        b = pair.b.hermitian();
        break;
      }
      default: {
        a = random_unit_interval(n, rng);
        b = random_unit_interval(n, rng);
      }
    }
    const OrthogonalityReport r =
        orthogonality_equivalence(UnitIntervalElement(a, tol), UnitIntervalElement(b, tol), tol);
    return holds(r.product_zero == (r.sum_below_one && r.abs_compat));
  });
  add("five_block_soundness", res, [](auto seed, Index n, const auto& tol) {
    GeneratorConfig cfg = config(GeneratorKind::CompatiblePair, n, seed);
    cfg.padding = Padding::Full;
    const ElementPair pair = gen_compatible_pair(cfg);
    const FiveBlockDecomposition f = five_block_decompose(pair.a, pair.b, tol);
    return below(std::max(f.max_invariant_residual, f.core_compat_residual), tol.res);
  });

  // --- canonical forms --------------------------------------------------------
  add("polar_identities", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(seed);
    const CMatrix x = gaussian_matrix(n, n, rng) / std::sqrt(static_cast<double>(n));
    const PolarParts parts = polar_decompose(x, tol);
    return below(polar_identity_residuals(x, parts, 3, tol).max(), tol.res);
  });
  add("canonical_round_trip", res, [](auto seed, Index n, const auto& tol) {
    Rng rng(derive_seed(seed, "conjugation", 0));
    const ElementPair commuting =
        gen_strict_commuting(config(GeneratorKind::StrictCommuting, n, seed));
    const ConstructedPair built = construct_pair(commuting.a, commuting.b, tol);
    const CMatrix W = haar_unitary(2 * n, rng);
    const UnitIntervalElement a(built.a.hermitian().conjugated(W), tol);
    const UnitIntervalElement b(built.b.hermitian().conjugated(W), tol);
    const CanonicalForm cf = canonical_decompose(a, b, tol);
    const auto [ra, rb] = reconstruct_from_canonical(cf, tol);
    const RVector want = spectral_decompose(jordan(commuting.a.hermitian(), commuting.a.hermitian())).eigenvalues;
    const RVector got = spectral_decompose(cf.a1).eigenvalues;
    const double worst = std::max(
        {op_norm(CMatrix(ra.matrix() - a.matrix())), op_norm(CMatrix(rb.matrix() - b.matrix())),
         (want - got).cwiseAbs().maxCoeff()});
    return TrialOutcome{worst <= tol.res && 2 * cf.p.rank() == 2 * n, worst};
  });
  add("canonical_proof_identity", res, [](auto seed, Index n, const auto& tol) {
    const ElementPair pair = gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed));
    const CanonicalForm cf = canonical_decompose(pair.a, pair.b, tol);
    return below(std::max(cf.residuals.proof_identity_a, cf.residuals.proof_identity_b),
                 tol.res);
  });
  add("constructor_postconditions", res, [](auto seed, Index n, const auto& tol) {
    const ElementPair commuting =
        gen_strict_commuting(config(GeneratorKind::StrictCommuting, n, seed));
    const ConstructedPair built = construct_pair(commuting.a, commuting.b, tol);
    const auto& r = built.residuals;
    const double worst = std::max({r.compatibility, r.abs_difference, r.abs_complement});
    return TrialOutcome{worst <= tol.res && is_strict(built.a, tol) && is_strict(built.b, tol), worst};
  });
  add("halmos_reconstruction", res, [](auto seed, Index n, const auto& tol) {
    const ProjectionPair pq =
        gen_generic_projections(config(GeneratorKind::GenericProjections, 2 * n, seed));
    const GenericPairForm g = halmos_decompose(pq.p, pq.q, tol);
    const auto& r = g.residuals;
    return below(std::max({r.reconstruction_p, r.reconstruction_q, r.pythagoras,
                           r.commutator, r.unitary}),
                 tol.res);
  });
  add("halmos_resemblance", res, [](auto seed, Index n, const auto& tol) {
    const ProjectionPair pq =
        gen_generic_projections(config(GeneratorKind::GenericProjections, 2 * n, seed));
    return below(halmos_decompose(pq.p, pq.q, tol).residuals.resemblance, tol.res);
  });

  // --- generators --------------------------------------------------------------
  add("generator_determinism", 0.0, [](auto seed, Index n, const auto&) {
    bool same = true;
    for (auto kind : {GeneratorKind::Strict, GeneratorKind::StrictCommuting,
                      GeneratorKind::CompatiblePair, GeneratorKind::ArbitraryUnitInterval}) {
      const GeneratorConfig cfg = config(kind, n, seed);
      auto gen = [&] {
        switch (kind) {
          case GeneratorKind::Strict: return gen_strict(cfg);
          case GeneratorKind::StrictCommuting: return gen_strict_commuting(cfg);
          case GeneratorKind::CompatiblePair: return gen_compatible_pair(cfg);
          default: return gen_unit_interval(cfg);
        }
      };
      const ElementPair x = gen(), y = gen();
      same = same && x.a.matrix() == y.a.matrix() && x.b.matrix() == y.b.matrix();
    }
    const GeneratorConfig gcfg = config(GeneratorKind::GenericProjections, 2 * n, seed);
    const ProjectionPair p = gen_generic_projections(gcfg), q = gen_generic_projections(gcfg);
    same = same && p.p.matrix() == q.p.matrix() && p.q.matrix() == q.q.matrix();
    return holds(same);
  });
  add("generator_certification", 0.0, [](auto seed, Index n, const auto& tol) {
    const ElementPair strict = gen_strict(config(GeneratorKind::Strict, n, seed));
    const ElementPair comm = gen_strict_commuting(config(GeneratorKind::StrictCommuting, n, seed));
    const ElementPair compat = gen_compatible_pair(config(GeneratorKind::CompatiblePair, n, seed));
    const ProjectionPair gp =
        gen_generic_projections(config(GeneratorKind::GenericProjections, 2 * n, seed));
    const HermitianMatrix slack = HermitianMatrix::identity(n) -
                                  jordan(comm.a.hermitian(), comm.a.hermitian()) -
                                  jordan(comm.b.hermitian(), comm.b.hermitian());
    return holds(is_strict(strict.a, tol) && is_strict(strict.b, tol) &&
                 is_strict(comm.a, tol) && is_strict(comm.b, tol) &&
                 commutes(comm.a.hermitian(), comm.b.hermitian(), tol) &&
                 is_strict(slack, tol) &&
                 is_abs_compatible(compat.a, compat.b, tol).verdict &&
                 generic_position_check(gp.p, gp.q, tol));
  });
  return props;
}

SuiteReport run_properties(const std::vector<Property>& properties,
                           const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (cfg.max_dim < 1) throw Error(ErrorCode::InvalidArgument, "max dimension must be at least 1");
  cfg.tol.validate();

  SuiteReport report;
  report.properties.resize(properties.size());

  auto run_one = [&](std::size_t i) {
    const Property& prop = properties[i];
    PropertyRecord rec;
    rec.name = prop.name;
    rec.tolerance = prop.tolerance;
    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed =
          derive_seed(cfg.seed, prop.name, static_cast<std::uint64_t>(t));
      const Index dim = 1 + static_cast<Index>(t) % cfg.max_dim;
      ++rec.trials;
      try {
        const TrialOutcome out = prop.run(seed, dim, cfg.tol);
        if (!out.passed) ++rec.failures;
        if (std::isfinite(out.residual)) rec.max_residual = std::max(rec.max_residual, out.residual);
      } catch (const std::exception& e) {
        ++rec.failures;
        ++rec.errors;
        if (rec.first_error.empty()) rec.first_error = e.what();
      }
    }
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.properties[i] = std::move(rec);
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(properties.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < properties.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < properties.size(); i = next++) run_one(i);
      });
    }
  }

  report.passed = std::all_of(report.properties.begin(), report.properties.end(),
                              [](const PropertyRecord& r) { return r.failures == 0; });
  return report;
}

SuiteReport run_property_suite(const SuiteConfig& cfg) {
  return run_properties(default_properties(), cfg);
}

Json to_json(const SuiteReport& report, bool include_timing) {
  Json props = Json::array();
  for (const auto& r : report.properties) {
    Json j{{"name", r.name},
           {"trials", r.trials},
           {"failures", r.failures},
           {"errors", r.errors},
           {"max_residual", r.max_residual},
           {"tolerance", r.tolerance}};
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    if (!r.first_error.empty()) j["first_error"] = r.first_error;
    props.push_back(std::move(j));
  }
  return Json{{"passed", report.passed}, {"properties", props}};
}

}  // namespace abscompat
