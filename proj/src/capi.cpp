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

#include "abscompat/abscompat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "abscompat/canonical.hpp"
#include "abscompat/generators.hpp"
#include "abscompat/serialize.hpp"
#include "abscompat/suite.hpp"

using namespace abscompat;

struct ac_matrix {
  CMatrix value;
  bool projection = false;
};

namespace {

thread_local std::string last_message;
thread_local std::string last_reason;

ac_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotHermitian: return AC_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotSquare: return AC_ERR_DIMENSION;
    case ErrorCode::Parse: return AC_ERR_PARSE;
    case ErrorCode::Io: return AC_ERR_IO;
    default:
      return is_precondition(code) ? AC_ERR_PRECONDITION : AC_ERR_NUMERICAL;
  }
}

ac_status record(ac_status status, std::string reason, std::string message) {
  last_reason = std::move(reason);
  last_message = std::move(message);
  return status;
}

template <typename F>
ac_status guarded(F&& body) {
  last_message.clear();
  last_reason.clear();
  try {
    body();
    return AC_OK;
  } catch (const Error& e) {
    return record(status_for(e.code()), std::string(e.reason()), e.what());
  } catch (const std::bad_alloc&) {
    return record(AC_ERR_INTERNAL, "out_of_memory", "allocation failed");
  } catch (const std::exception& e) {
    return record(AC_ERR_INTERNAL, "internal", e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  }
}

Tolerance to_tol(ac_tolerance t) {
  Tolerance tol{t.eig, t.res};
  tol.validate();
  return tol;
}

HermitianMatrix hermitian(const ac_matrix* m, const Tolerance& tol, const char* what) {
  require(m, what);
  return HermitianMatrix::checked(m->value, tol);
}

UnitIntervalElement element(const ac_matrix* m, const Tolerance& tol, const char* what) {
  return UnitIntervalElement(hermitian(m, tol, what), tol);
}

ProjectionMatrix projection(const ac_matrix* m, const Tolerance& tol, const char* what) {
  return ProjectionMatrix::from_matrix(hermitian(m, tol, what), tol);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  if (out != nullptr) *out = duplicate(dump_json(j));
}

ac_matrix* wrap(CMatrix m, bool is_projection = false) {
  return new ac_matrix{std::move(m), is_projection};
}

// Validates the document (Hermitian, and a projection when it says so) but
// keeps the raw entries; consumers symmetrize on use.
ac_matrix* load_checked(const Json& j, const Tolerance& tol) {
  hermitian_from_json(j, tol);
  const bool is_projection = j.is_object() && j.value("projection", false);
  if (is_projection) projection_from_json(j, tol);
  return wrap(matrix_from_json(j), is_projection);
}

Json matrix_json(const ac_matrix* m) {
  if (m->projection) {
    return projection_to_json(ProjectionMatrix::from_matrix(HermitianMatrix(m->value)));
  }
  return matrix_to_json(m->value);
}

}  // namespace

extern "C" {

const char* ac_version(void) { return "0.1.0"; }

ac_tolerance ac_default_tolerance(void) {
  const Tolerance t;
  return {t.eig, t.res};
}

const char* ac_status_name(ac_status status) {
  switch (status) {
    case AC_OK: return "ok";
    case AC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case AC_ERR_DIMENSION: return "dimension";
    case AC_ERR_PARSE: return "parse";
    case AC_ERR_IO: return "io";
    case AC_ERR_PRECONDITION: return "precondition";
    case AC_ERR_NUMERICAL: return "numerical";
    case AC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ac_last_error_message(void) { return last_message.c_str(); }
const char* ac_last_error_reason(void) { return last_reason.c_str(); }

void ac_string_free(char* s) { std::free(s); }

ac_status ac_matrix_create(size_t n, const double* re, const double* im,
                           ac_matrix** out) {
  return guarded([&] {
    require(out, "out");
    require(re, "re");
    const auto dim = static_cast<Index>(n);
    CMatrix m(dim, dim);
    for (Index r = 0; r < dim; ++r)
      for (Index c = 0; c < dim; ++c) {
        const std::size_t k = static_cast<std::size_t>(r * dim + c);
        m(r, c) = Complex(re[k], im != nullptr ? im[k] : 0.0);
      }
    *out = wrap(std::move(m));
  });
}

ac_status ac_matrix_from_json(const char* text, ac_tolerance tol, ac_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    *out = load_checked(j, to_tol(tol));
  });
}

ac_status ac_matrix_load(const char* path, ac_tolerance tol, ac_matrix** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = load_checked(read_json_file(path), to_tol(tol));
  });
}

ac_status ac_matrix_to_json(const ac_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    emit(out, matrix_json(m));
  });
}

ac_status ac_matrix_save(const ac_matrix* m, const char* path) {
  return guarded([&] {
    require(m, "matrix");
    require(path, "path");
    write_text_file(path, dump_json(matrix_json(m)));
  });
}

size_t ac_matrix_dim(const ac_matrix* m) {
  return m == nullptr ? 0 : static_cast<size_t>(m->value.rows());
}

ac_status ac_matrix_get(const ac_matrix* m, size_t row, size_t col, double* re,
                        double* im) {
  return guarded([&] {
    require(m, "matrix");
    const auto r = static_cast<Index>(row), c = static_cast<Index>(col);
    if (r >= m->value.rows() || c >= m->value.cols()) {
      throw Error(ErrorCode::DimensionMismatch, "index out of range");
    }
    if (re != nullptr) *re = m->value(r, c).real();
    if (im != nullptr) *im = m->value(r, c).imag();
  });
}

void ac_matrix_free(ac_matrix* m) { delete m; }

ac_status ac_check_compatible(const ac_matrix* a, const ac_matrix* b,
                              ac_tolerance tol, int* verdict, double* residual,
                              char** report_json) {
  return guarded([&] {
    const Tolerance t = to_tol(tol);
    const CompatibilityReport r = is_abs_compatible(element(a, t, "a"), element(b, t, "b"), t);
    if (verdict != nullptr) *verdict = r.verdict ? 1 : 0;
    if (residual != nullptr) *residual = r.residual;
    emit(report_json, to_json(r));
  });
}

ac_status ac_characterize(const ac_matrix* a, const ac_matrix* b,
                          const ac_matrix* p1, ac_tolerance tol, int* certified,
                          char** report_json) {
  return guarded([&] {
    const Tolerance t = to_tol(tol);
    const CharacterizationReport r = check_characterization(
        element(a, t, "a"), element(b, t, "b"), projection(p1, t, "p1"), t);
    if (certified != nullptr) *certified = r.certified() ? 1 : 0;
    emit(report_json, to_json(r));
  });
}

ac_status ac_orthogonality(const ac_matrix* a, const ac_matrix* b,
                           ac_tolerance tol, char** report_json) {
  return guarded([&] {
    const Tolerance t = to_tol(tol);
    emit(report_json,
         to_json(orthogonality_equivalence(element(a, t, "a"), element(b, t, "b"), t)));
  });
}

ac_status ac_canonical_decompose(const ac_matrix* a, const ac_matrix* b,
                                 ac_tolerance tol, char** report_json) {
  return guarded([&] {
    const Tolerance t = to_tol(tol);
    emit(report_json,
         to_json(canonical_decompose(element(a, t, "a"), element(b, t, "b"), t)));
  });
}

ac_status ac_five_block_decompose(const ac_matrix* a, const ac_matrix* b,
                                  ac_tolerance tol, char** report_json) {
  return guarded([&] {
    const Tolerance t = to_tol(tol);
    emit(report_json,
         to_json(five_block_decompose(element(a, t, "a"), element(b, t, "b"), t)));
  });
}

ac_status ac_construct_pair(const ac_matrix* a, const ac_matrix* b,
                            ac_tolerance tol, ac_matrix** a_out,
                            ac_matrix** b_out) {
  return guarded([&] {
    require(a_out, "a_out");
    require(b_out, "b_out");
    const Tolerance t = to_tol(tol);
    ConstructedPair pair = construct_pair(element(a, t, "a"), element(b, t, "b"), t);
    *a_out = wrap(pair.a.matrix());
    *b_out = wrap(pair.b.matrix());
  });
}

ac_status ac_halmos_decompose(const ac_matrix* p, const ac_matrix* q,
                              ac_tolerance tol, char** report_json) {
  return guarded([&] {
    const Tolerance t = to_tol(tol);
    emit(report_json,
         to_json(halmos_decompose(projection(p, t, "p"), projection(q, t, "q"), t)));
  });
}

ac_status ac_generate(ac_gen_kind kind, size_t n, uint64_t seed, double margin,
                      ac_matrix** first, ac_matrix** second) {
  return guarded([&] {
    require(first, "first");
    require(second, "second");
    GeneratorConfig cfg;
    cfg.dim = static_cast<Index>(n);
    cfg.seed = seed;
    cfg.margin = margin;
    switch (kind) {
      case AC_GEN_STRICT: cfg.kind = GeneratorKind::Strict; break;
      case AC_GEN_STRICT_COMMUTING: cfg.kind = GeneratorKind::StrictCommuting; break;
      case AC_GEN_COMPATIBLE_PAIR: cfg.kind = GeneratorKind::CompatiblePair; break;
      case AC_GEN_GENERIC_PROJECTIONS: cfg.kind = GeneratorKind::GenericProjections; break;
      case AC_GEN_ARBITRARY_UNIT_INTERVAL: cfg.kind = GeneratorKind::ArbitraryUnitInterval; break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
    }
    if (cfg.kind == GeneratorKind::GenericProjections) {
      const ProjectionPair pq = gen_generic_projections(cfg);
      *first = wrap(pq.p.matrix(), true);
      *second = wrap(pq.q.matrix(), true);
      return;
    }
    ElementPair pair = [&] {
      switch (cfg.kind) {
        case GeneratorKind::Strict: return gen_strict(cfg);
        case GeneratorKind::StrictCommuting: return gen_strict_commuting(cfg);
        case GeneratorKind::CompatiblePair: return gen_compatible_pair(cfg);
        default: return gen_unit_interval(cfg);
      }
    }();
    *first = wrap(pair.a.matrix());
    *second = wrap(pair.b.matrix());
  });
}

ac_status ac_run_suite(int trials, size_t max_n, uint64_t seed, ac_tolerance tol,
                       unsigned threads, int include_timing, int* all_passed,
                       char** report_json) {
  return guarded([&] {
    SuiteConfig cfg;
    cfg.trials = trials;
    cfg.max_dim = static_cast<Index>(max_n);
    cfg.seed = seed;
    cfg.tol = to_tol(tol);
    cfg.threads = threads;
    const SuiteReport report = run_property_suite(cfg);
    if (all_passed != nullptr) *all_passed = report.passed ? 1 : 0;
    emit(report_json, to_json(report, include_timing != 0));
  });
}

}  // extern "C"
