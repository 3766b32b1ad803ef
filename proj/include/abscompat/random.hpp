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
#include <random>
#include <string_view>

#include "abscompat/matrix.hpp"

namespace abscompat {

/// Seedable generator with platform-independent output.
///
/// Raw bits come from std::mt19937_64, whose sequence is fixed by the
/// standard. Real and Gaussian variates are derived here rather than through
/// <random> distributions, whose algorithms are implementation-defined:
/// uniform() takes the top 53 bits, normal() is Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  double normal();
  /// Standard complex Gaussian: (x + iy)/sqrt(2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Stream seed for (`stream`, `index`) under a master seed. FNV-1a of the
/// stream name and the index are mixed through splitmix64, so every trial of
/// every property gets an independent, order-free stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream,
                          std::uint64_t index);

/// Complex Ginibre matrix (i.i.d. standard complex Gaussian entries).
CMatrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary: Householder QR of a Ginibre matrix with the
/// phases of R's diagonal moved into Q, so that diag(R) > 0.
CMatrix haar_unitary(Index n, Rng& rng);

}  // namespace abscompat
