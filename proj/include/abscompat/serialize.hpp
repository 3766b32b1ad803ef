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

#include <string>

#include <json.hpp>

#include "abscompat/canonical.hpp"
#include "abscompat/compatibility.hpp"

namespace abscompat {

using Json = nlohmann::json;

// Matrix file format: {"n": k, "re": [[...], ...], "im": [[...], ...]}, rows
// in order. Flat row-major arrays of length n*n are accepted on input, and
// "im" may be omitted for real data. Rectangular matrices (bases, U) carry
// "rows"/"cols" instead of "n".

Json matrix_to_json(const CMatrix& m);
Json projection_to_json(const ProjectionMatrix& p);

CMatrix matrix_from_json(const Json& j);
/// Rejects asymmetry above tol.res.
HermitianMatrix hermitian_from_json(const Json& j, const Tolerance& tol = {});
/// Rejects non-projections and a declared "rank" that disagrees with the
/// trace.
ProjectionMatrix projection_from_json(const Json& j, const Tolerance& tol = {});

Json to_json(const Tolerance& tol);
Json to_json(const CompatibilityReport& r);
Json to_json(const CharacterizationReport& r);
Json to_json(const OrthogonalityReport& r);
Json to_json(const FiveBlockDecomposition& f);
Json to_json(const CanonicalForm& cf);
Json to_json(const GenericPairForm& g);

/// Serializes with every floating-point number printed to 17 significant
/// digits. Non-finite numbers become null.
std::string dump_json(const Json& j, int indent = 2);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace abscompat
