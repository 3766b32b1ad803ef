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

#include "abscompat/error.hpp"

namespace abscompat {

std::string_view reason_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NotSquare: return "not_square";
    case ErrorCode::NotHermitian: return "not_hermitian";
    case ErrorCode::OutOfUnitInterval: return "out_of_unit_interval";
    case ErrorCode::NotPositive: return "not_positive";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::EigenFailure: return "eigensolver_failure";
    case ErrorCode::NotProjection: return "not_projection";
    case ErrorCode::NotResolution: return "not_resolution_of_identity";
    case ErrorCode::NotStrict: return "not_strict";
    case ErrorCode::NotCommuting: return "not_commuting";
    case ErrorCode::SumBoundViolated: return "sum_bound_violated";
    case ErrorCode::ComplementNotStrict: return "complement_not_strict";
    case ErrorCode::NotCompatible: return "not_compatible";
    case ErrorCode::OddDimension: return "odd_dimension";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::NearDegenerate: return "near_degenerate";
    case ErrorCode::InputIntegrity: return "input_integrity";
    case ErrorCode::InvariantViolation: return "invariant_violation";
    case ErrorCode::NotGeneric: return "not_generic";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Io: return "io_error";
  }
  return "unknown";
}

bool is_precondition(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian:
    case ErrorCode::OutOfUnitInterval:
    case ErrorCode::NotPositive:
    case ErrorCode::DomainError:
    case ErrorCode::NotProjection:
    case ErrorCode::NotResolution:
    case ErrorCode::NotStrict:
    case ErrorCode::NotCommuting:
    case ErrorCode::SumBoundViolated:
    case ErrorCode::ComplementNotStrict:
    case ErrorCode::NotCompatible:
    case ErrorCode::OddDimension:
    case ErrorCode::RankMismatch:
    case ErrorCode::NotGeneric:
      return true;
    default:
      return false;
  }
}

}  // namespace abscompat
