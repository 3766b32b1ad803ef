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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success (or positive verdict), 1 negative verdict,
// 2 precondition or numerical failure (a JSON error object with a
// machine-readable "reason" is printed on stdout), 3 usage, I/O or parse
// errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "abscompat/abscompat.h"

namespace {

constexpr int kNegative = 1;
constexpr int kPrecondition = 2;
constexpr int kUsage = 3;

struct MatrixDeleter {
  void operator()(ac_matrix* m) const { ac_matrix_free(m); }
};
using MatrixPtr = std::unique_ptr<ac_matrix, MatrixDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ac_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Failure {
  int exit_code;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += ' ';
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Prints the error and throws Failure with the matching exit code.
void check(ac_status status) {
  if (status == AC_OK) return;
  const std::string reason = ac_last_error_reason();
  const std::string message = ac_last_error_message();
  std::cout << "{\n  \"error\": {\n    \"status\": \"" << ac_status_name(status)
            << "\",\n    \"reason\": \"" << json_escape(reason)
            << "\",\n    \"message\": \"" << json_escape(message) << "\"\n  }\n}\n";
  std::cerr << "abscompat: " << message << '\n';
  const bool precondition =
      status == AC_ERR_PRECONDITION || status == AC_ERR_NUMERICAL;
  throw Failure{precondition ? kPrecondition : kUsage};
}

MatrixPtr load(const std::string& path, const ac_tolerance& tol) {
  ac_matrix* m = nullptr;
  check(ac_matrix_load(path.c_str(), tol, &m));
  return MatrixPtr(m);
}

void print(char* json) {
  StringPtr owned(json);
  std::cout << owned.get() << '\n';
}

void save(const ac_matrix* m, const std::filesystem::path& path) {
  check(ac_matrix_save(m, path.string().c_str()));
  std::cerr << "wrote " << path.string() << '\n';
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "abscompat: cannot create " << dir << ": " << ec.message() << '\n';
    throw Failure{kUsage};
  }
}

void add_tolerance(CLI::App* cmd, ac_tolerance& tol) {
  cmd->add_option("--tol", tol.res, "Operator-norm residual threshold")
      ->capture_default_str();
  cmd->add_option("--tol-eig", tol.eig, "Eigenvalue classification threshold")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Absolutely compatible pairs: detection, canonical forms and construction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ac_version());

  ac_tolerance tol = ac_default_tolerance();
  int exit_code = 0;

  // gen
  std::string kind = "compatible-pair", out_dir = ".";
  std::size_t n = 2;
  std::uint64_t seed = 0;
  double margin = 0.05;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind, "strict | strict-commuting | compatible-pair | "
                                  "generic-projections | arbitrary-unit-interval")
      ->check(CLI::IsMember({"strict", "strict-commuting", "compatible-pair",
                             "generic-projections", "arbitrary-unit-interval"}))
      ->required();
  gen->add_option("--n", n, "Base dimension (full even dimension for generic-projections)")
      ->required();
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("--margin", margin, "Spectral distance from {0, 1}")->capture_default_str();
  gen->add_option("--out", out_dir, "Output directory")->required();
  gen->callback([&] {
    static const std::pair<const char*, ac_gen_kind> kinds[] = {
        {"strict", AC_GEN_STRICT},
        {"strict-commuting", AC_GEN_STRICT_COMMUTING},
        {"compatible-pair", AC_GEN_COMPATIBLE_PAIR},
        {"generic-projections", AC_GEN_GENERIC_PROJECTIONS},
        {"arbitrary-unit-interval", AC_GEN_ARBITRARY_UNIT_INTERVAL}};
    ac_gen_kind k = AC_GEN_COMPATIBLE_PAIR;
    for (const auto& [name, value] : kinds)
      if (kind == name) k = value;
    ac_matrix *first = nullptr, *second = nullptr;
    check(ac_generate(k, n, seed, margin, &first, &second));
    MatrixPtr f(first), s(second);
    ensure_dir(out_dir);
    const bool projections = k == AC_GEN_GENERIC_PROJECTIONS;
    save(f.get(), std::filesystem::path(out_dir) / (projections ? "p.json" : "a.json"));
    save(s.get(), std::filesystem::path(out_dir) / (projections ? "q.json" : "b.json"));
  });

  // check
  std::string a_path, b_path, p1_path, p_path, q_path;
  auto* chk = app.add_subcommand("check", "Test absolute compatibility of a and b");
  chk->add_option("--a", a_path, "Matrix file")->required();
  chk->add_option("--b", b_path, "Matrix file")->required();
  add_tolerance(chk, tol);
  chk->callback([&] {
    const MatrixPtr a = load(a_path, tol), b = load(b_path, tol);
    int verdict = 0;
    char* json = nullptr;
    check(ac_check_compatible(a.get(), b.get(), tol, &verdict, nullptr, &json));
    print(json);
    exit_code = verdict ? 0 : kNegative;
  });

  // characterize
  auto* chr = app.add_subcommand("characterize",
                                 "Evaluate the four block conditions for witness p1");
  chr->add_option("--a", a_path, "Matrix file")->required();
  chr->add_option("--b", b_path, "Matrix file")->required();
  chr->add_option("--p1", p1_path, "Projection file")->required();
  add_tolerance(chr, tol);
  chr->callback([&] {
    const MatrixPtr a = load(a_path, tol), b = load(b_path, tol), p1 = load(p1_path, tol);
    int certified = 0;
    char* json = nullptr;
    check(ac_characterize(a.get(), b.get(), p1.get(), tol, &certified, &json));
    print(json);
    exit_code = certified ? 0 : kNegative;
  });

  // orthogonality
  auto* orth = app.add_subcommand("orthogonality",
                                  "Report ab = 0, a + b <= 1 and compatibility");
  orth->add_option("--a", a_path, "Matrix file")->required();
  orth->add_option("--b", b_path, "Matrix file")->required();
  add_tolerance(orth, tol);
  orth->callback([&] {
    const MatrixPtr a = load(a_path, tol), b = load(b_path, tol);
    char* json = nullptr;
    check(ac_orthogonality(a.get(), b.get(), tol, &json));
    print(json);
  });

  // decompose
  bool five_block = false;
  auto* dec = app.add_subcommand("decompose",
                                 "Canonical form of a strict compatible pair");
  dec->add_option("--a", a_path, "Matrix file")->required();
  dec->add_option("--b", b_path, "Matrix file")->required();
  dec->add_flag("--five-block", five_block,
                "Split a general compatible pair into identity, zero and strict parts");
  add_tolerance(dec, tol);
  dec->callback([&] {
    const MatrixPtr a = load(a_path, tol), b = load(b_path, tol);
    char* json = nullptr;
    check(five_block ? ac_five_block_decompose(a.get(), b.get(), tol, &json)
                     : ac_canonical_decompose(a.get(), b.get(), tol, &json));
    print(json);
  });

  // construct
  std::string construct_out = ".";
  auto* con = app.add_subcommand(
      "construct", "Build a compatible pair on the doubled space from a strict commuting pair");
  con->add_option("--a", a_path, "Matrix file")->required();
  con->add_option("--b", b_path, "Matrix file")->required();
  con->add_option("--out", construct_out, "Output directory for a1.json and b1.json")
      ->capture_default_str();
  add_tolerance(con, tol);
  con->callback([&] {
    const MatrixPtr a = load(a_path, tol), b = load(b_path, tol);
    ac_matrix *a1 = nullptr, *b1 = nullptr;
    check(ac_construct_pair(a.get(), b.get(), tol, &a1, &b1));
    MatrixPtr a_out(a1), b_out(b1);
    ensure_dir(construct_out);
    save(a_out.get(), std::filesystem::path(construct_out) / "a1.json");
    save(b_out.get(), std::filesystem::path(construct_out) / "b1.json");
  });

  // halmos
  auto* hal = app.add_subcommand("halmos", "Decompose a pair of projections in generic position");
  hal->add_option("--p", p_path, "Projection file")->required();
  hal->add_option("--q", q_path, "Projection file")->required();
  add_tolerance(hal, tol);
  hal->callback([&] {
    const MatrixPtr p = load(p_path, tol), q = load(q_path, tol);
    char* json = nullptr;
    check(ac_halmos_decompose(p.get(), q.get(), tol, &json));
    print(json);
  });

  // suite
  int trials = 20;
  std::size_t max_n = 8;
  std::string json_path;
  unsigned threads = 1;
  bool no_timing = false;
  auto* sui = app.add_subcommand("suite", "Run every property over random instances");
  sui->add_option("--trials", trials, "Trials per property")->required();
  sui->add_option("--max-n", max_n, "Largest base dimension")->required();
  sui->add_option("--seed", seed, "Master seed")->required();
  sui->add_option("--json", json_path, "Also write the report to this file");
  sui->add_option("--threads", threads, "Worker threads")->capture_default_str();
  sui->add_flag("--no-timing", no_timing, "Omit wall-clock timings (reproducible output)");
  add_tolerance(sui, tol);
  sui->callback([&] {
    int passed = 0;
    char* json = nullptr;
    check(ac_run_suite(trials, max_n, seed, tol, threads, no_timing ? 0 : 1, &passed, &json));
    StringPtr owned(json);
    std::cout << owned.get() << '\n';
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      out << owned.get() << '\n';
      if (!out) {
        std::cerr << "abscompat: cannot write " << json_path << '\n';
        throw Failure{kUsage};
      }
    }
    exit_code = passed ? 0 : kNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return exit_code;
}
