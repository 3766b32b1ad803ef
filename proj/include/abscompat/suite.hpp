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
#include <functional>
#include <string>
#include <vector>

#include "abscompat/serialize.hpp"

namespace abscompat {

struct TrialOutcome {
  bool passed = false;
  /// The quantity compared against the property's threshold.
  double residual = 0.0;
};

/// One registered invariant. `run` receives a stream seed already derived
/// from (suite seed, name, trial index) and the trial dimension.
struct Property {
  std::string name;
  /// Threshold reported alongside the results; the trial function applies it.
  double tolerance = 0.0;
  std::function<TrialOutcome(std::uint64_t seed, Index dim, const Tolerance& tol)> run;
};

struct PropertyRecord {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// Trials that threw; counted in `failures` as well.
  int errors = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  double elapsed_seconds = 0.0;
  std::string first_error;
};

struct SuiteReport {
  std::vector<PropertyRecord> properties;
  bool passed = false;
};

struct SuiteConfig {
  int trials = 1;
  Index max_dim = 1;
  std::uint64_t seed = 0;
  Tolerance tol;
  /// Worker threads; properties are distributed across them. Results do not
  /// depend on this value.
  unsigned threads = 1;
};

/// Every invariant of the library, in a fixed order.
std::vector<Property> default_properties();

/// Trial t of a property runs at dimension 1 + t mod max_dim (properties that
/// need an even or doubled dimension scale it themselves).
SuiteReport run_properties(const std::vector<Property>& properties,
                           const SuiteConfig& cfg);

SuiteReport run_property_suite(const SuiteConfig& cfg);

/// Timing is wall-clock and so differs between runs; leave it out to get a
/// reproducible document.
Json to_json(const SuiteReport& report, bool include_timing = true);

}  // namespace abscompat
