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

#include "abscompat/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace abscompat {

namespace {

Json rows_of(const CMatrix& m, bool imaginary) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Reads either nested rows or a flat row-major array into `out` (real or
// imaginary part).
void fill_part(const Json& part, Index rows, Index cols, bool imaginary,
               CMatrix& out, const char* name) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, std::string("field \"") + name + "\": " + why);
  };
  if (!part.is_array()) bad("expected an array");
  auto set = [&](Index r, Index c, const Json& v) {
    if (!v.is_number()) bad("entries must be numbers");
    const double x = v.get<double>();
    if (imaginary) out(r, c).imag(x); else out(r, c).real(x);
  };
  const bool nested = !part.empty() && part.front().is_array();
  if (nested) {
    if (static_cast<Index>(part.size()) != rows) bad("wrong number of rows");
    for (Index r = 0; r < rows; ++r) {
      const Json& row = part[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
        bad("row " + std::to_string(r) + " has the wrong length (matrix not square?)");
      }
      for (Index c = 0; c < cols; ++c) set(r, c, row[static_cast<std::size_t>(c)]);
    }
  } else {
    if (static_cast<Index>(part.size()) != rows * cols) bad("wrong number of entries");
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c)
        set(r, c, part[static_cast<std::size_t>(r * cols + c)]);
  }
}

void dump_into(const Json& j, int indent, int depth, std::string& out) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
        // Keep floats recognisable as floats.
        if (std::strpbrk(buf, ".e") == nullptr) out += ".0";
      }
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Rows of numbers stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(),
                                    [](const Json& v) { return v.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) newline(depth + 1);
        dump_into(v, indent, depth + 1, out);
        first = false;
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), indent, depth + 1, out);
        first = false;
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json j;
  if (m.rows() == m.cols()) {
    j["n"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["re"] = rows_of(m, false);
  j["im"] = rows_of(m, true);
  return j;
}

Json projection_to_json(const ProjectionMatrix& p) {
  Json j = matrix_to_json(p.matrix());
  j["projection"] = true;
  j["rank"] = p.rank();
  return j;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "matrix must be a JSON object");
  Index rows = 0, cols = 0;
  try {
    if (j.contains("n")) {
      rows = cols = j.at("n").get<Index>();
    } else if (j.contains("rows") && j.contains("cols")) {
      rows = j.at("rows").get<Index>();
      cols = j.at("cols").get<Index>();
    } else {
      throw Error(ErrorCode::Parse, "matrix needs \"n\" (or \"rows\"/\"cols\")");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad matrix size: ") + e.what());
  }
  if (rows < 0 || cols < 0) throw Error(ErrorCode::Parse, "negative matrix size");
  if (!j.contains("re")) throw Error(ErrorCode::Parse, "matrix needs \"re\"");
  CMatrix m = CMatrix::Zero(rows, cols);
  fill_part(j.at("re"), rows, cols, false, m, "re");
  if (j.contains("im")) fill_part(j.at("im"), rows, cols, true, m, "im");
  return m;
}

HermitianMatrix hermitian_from_json(const Json& j, const Tolerance& tol) {
  const CMatrix m = matrix_from_json(j);
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, "Hermitian input must be square");
  }
  return HermitianMatrix::checked(m, tol);
}

ProjectionMatrix projection_from_json(const Json& j, const Tolerance& tol) {
  ProjectionMatrix p = ProjectionMatrix::from_matrix(hermitian_from_json(j, tol), tol);
  if (j.contains("rank") && j.at("rank").is_number_integer() &&
      j.at("rank").get<Index>() != p.rank()) {
    throw Error(ErrorCode::NotProjection, "declared rank disagrees with the trace");
  }
  return p;
}

Json to_json(const Tolerance& tol) {
  return Json{{"tol_eig", tol.eig}, {"tol_res", tol.res}};
}

Json to_json(const CompatibilityReport& r) {
  return Json{{"residual", r.residual},
              {"verdict", r.verdict},
              {"tolerance", to_json(r.tol_used)}};
}

Json to_json(const CharacterizationReport& r) {
  return Json{{"residual_i", r.residuals[0]},
              {"residual_ii", r.residuals[1]},
              {"residual_iii", r.residuals[2]},
              {"residual_iv", r.residuals[3]},
              {"max_residual", r.max_residual()},
              {"certified", r.certified()},
              {"tolerance", to_json(r.tol_used)},
              {"p1", projection_to_json(r.p1)}};
}

Json to_json(const OrthogonalityReport& r) {
  return Json{{"product_zero", r.product_zero},
              {"sum_below_one", r.sum_below_one},
              {"abs_compat", r.abs_compat}};
}

Json to_json(const FiveBlockDecomposition& f) {
  static constexpr const char* names[5] = {"p1", "p2", "s", "n1", "n2"};
  Json projections, a_blocks, b_blocks, ranks;
  for (std::size_t i = 0; i < 5; ++i) {
    projections[names[i]] = projection_to_json(f.family[i]);
    a_blocks[names[i]] = matrix_to_json(f.a_blocks[i]);
    b_blocks[names[i]] = matrix_to_json(f.b_blocks[i]);
    ranks[names[i]] = f.family[i].rank();
  }
  return Json{{"projections", projections},
              {"ranks", ranks},
              {"a_blocks", a_blocks},
              {"b_blocks", b_blocks},
              {"max_invariant_residual", f.max_invariant_residual},
              {"core_compat_residual", f.core_compat_residual},
              {"tolerance", to_json(f.tol_used)}};
}

Json to_json(const CanonicalForm& cf) {
  const auto& r = cf.residuals;
  return Json{
      {"n", cf.p.dim()},
      {"rank_p", cf.p.rank()},
      {"rank_p1", cf.p.dim() - cf.p.rank()},
      {"p", projection_to_json(cf.p)},
      {"a1", matrix_to_json(cf.a1.matrix())},
      {"b1", matrix_to_json(cf.b1.matrix())},
      {"root_a1b1", matrix_to_json(cf.root.matrix())},
      {"u", matrix_to_json(cf.u)},
      {"u_embedded", matrix_to_json(cf.embedded_u())},
      {"U", matrix_to_json(cf.U)},
      {"residuals",
       {{"reconstruction_a", r.reconstruction_a},
        {"reconstruction_b", r.reconstruction_b},
        {"commutator_a1_b1", r.commutator},
        {"initial_isometry", r.initial_isometry},
        {"final_isometry", r.final_isometry},
        {"unitary", r.unitary},
        {"sum_bound", r.sum_bound},
        {"proof_identity_a", r.proof_identity_a},
        {"proof_identity_b", r.proof_identity_b}}},
      {"tolerance", to_json(cf.tol_used)}};
}

Json to_json(const GenericPairForm& g) {
  const auto& r = g.residuals;
  return Json{{"n", g.U.cols()},
              {"half_dim", g.C.dim()},
              {"C", matrix_to_json(g.C.matrix())},
              {"S", matrix_to_json(g.S.matrix())},
              {"U", matrix_to_json(g.U)},
              {"anchored",
               {{"cos", matrix_to_json(g.anchored_cos.matrix())},
                {"sin", matrix_to_json(g.anchored_sin.matrix())},
                {"U", matrix_to_json(g.anchored_U)}}},
              {"residuals",
               {{"reconstruction_p", r.reconstruction_p},
                {"reconstruction_q", r.reconstruction_q},
                {"pythagoras", r.pythagoras},
                {"commutator", r.commutator},
                {"unitary", r.unitary},
                {"resemblance", r.resemblance}}},
              {"tolerance", to_json(g.tol_used)}};
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text << '\n';
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path);
}

}  // namespace abscompat
