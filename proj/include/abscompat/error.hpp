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

#include <stdexcept>
#include <string>
#include <string_view>

namespace abscompat {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotSquare,
  NotHermitian,
  OutOfUnitInterval,
  NotPositive,
  DomainError,
  EigenFailure,
  NotProjection,
  NotResolution,
  NotStrict,
  NotCommuting,
  SumBoundViolated,
  ComplementNotStrict,
  NotCompatible,
  OddDimension,
  RankMismatch,
  NearDegenerate,
  InputIntegrity,
  InvariantViolation,
  NotGeneric,
  Parse,
  Io,
};

/// Stable snake_case identifier, used as the machine-readable failure reason
/// by the C API and the CLI.
std::string_view reason_string(ErrorCode code);

/// Precondition failures are caller mistakes (wrong kind of input); the rest
/// are numerical breakdowns, I/O or parse failures.
bool is_precondition(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view reason() const { return reason_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace abscompat
