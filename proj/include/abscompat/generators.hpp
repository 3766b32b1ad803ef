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

#include <cstdint>
#include <optional>
#include <string_view>

#include "abscompat/projections.hpp"
#include "abscompat/random.hpp"

namespace abscompat {

enum class GeneratorKind {
  Strict,
  StrictCommuting,
  CompatiblePair,
  GenericProjections,
  ArbitraryUnitInterval,
};

/// Identity/zero/diagonal blocks direct-summed around the strict core of a
/// generated compatible pair.
enum class Padding {
  None,
  P1Only,  // one extra coordinate where a = 1
  Full,    // 0-2 coordinates in each of the four non-strict blocks
};

std::optional<GeneratorKind> parse_kind(std::string_view name);
std::string_view kind_name(GeneratorKind kind);

struct GeneratorConfig {
  /// Base dimension. Compatible pairs come out with dimension 2*dim plus
  /// padding; generic projections use `dim` as the full (even) dimension.
  Index dim = 1;
  std::uint64_t seed = 0;
  /// Distance kept between generated spectra and {0, 1}.
  double margin = 0.05;
  GeneratorKind kind = GeneratorKind::StrictCommuting;
  Padding padding = Padding::None;
  /// Generic projections: use this principal angle for every block.
  std::optional<double> fixed_angle;

  void validate() const;
};

struct ElementPair {
  UnitIntervalElement a;
  UnitIntervalElement b;
};

struct ProjectionPair {
  ProjectionMatrix p;
  ProjectionMatrix q;
};

/// Two independent strict elements, spectra in (margin, 1 - margin).
ElementPair gen_strict(const GeneratorConfig& cfg);

/// a = V diag(alpha) V*, b = V diag(beta) V* with alpha_i = r_i cos t_i,
/// beta_i = r_i sin t_i; a, b, 1 - a^2 - b^2 strict, a and b commuting.
ElementPair gen_strict_commuting(const GeneratorConfig& cfg);

/// A compatible pair: the doubled-space pair built from a strict commuting
/// pair, padded per cfg.padding and conjugated by a Haar unitary. Certified
/// compatible before returning.
ElementPair gen_compatible_pair(const GeneratorConfig& cfg);

/// P = U* [[1, 0], [0, 0]] U, Q = U* [[c^2, cs], [cs, s^2]] U with principal
/// angles in (delta, pi/2 - delta), delta = asin(margin). Certified generic.
ProjectionPair gen_generic_projections(const GeneratorConfig& cfg);

/// Two independent elements with spectra uniform on [0, 1].
ElementPair gen_unit_interval(const GeneratorConfig& cfg);

// Building blocks shared with the property suite.

/// V diag(values) V* for a Haar V.
HermitianMatrix random_with_spectrum(const RVector& values, Rng& rng);
HermitianMatrix random_unit_interval(Index n, Rng& rng, double margin = 0.0);
/// Rank drawn uniformly from [1, n-1] when n >= 2.
ProjectionMatrix random_projection(Index n, Rng& rng);
ProjectionMatrix random_projection(Index n, Index rank, Rng& rng);

}  // namespace abscompat
