#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "rankcodes/json_io.hpp"
#include "rankcodes/verify_paper.hpp"

using namespace rankcodes;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(RANKCODE_CLI_PATH) + " " + args +
                    " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path tmp_dir() {
  auto d = std::filesystem::temp_directory_path() / "rankcode-cli-tests";
  std::filesystem::create_directories(d);
  return d;
}

std::string write_code_file(const AnyCode& c, const std::string& name) {
  auto p = tmp_dir() / name;
  save_code(c, p.string());
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("construct random is deterministic and writes a valid code file") {
  auto f1 = (tmp_dir() / "r1.json").string();
  auto f2 = (tmp_dir() / "r2.json").string();
  CHECK(run("construct random --q 2 --n 3 --m 3 --t 4 --seed 7 --out " + f1)
            .exit_code == 0);
  CHECK(run("construct random --q 2 --n 3 --m 3 --t 4 --seed 7 --out " + f2)
            .exit_code == 0);
  CHECK(slurp(f1) == slurp(f2));
  AnyCode c = load_code(f1);
  REQUIRE(std::holds_alternative<MatrixCode>(c));
  CHECK(std::get<MatrixCode>(c).dim() == 4);
}

TEST_CASE("construct gabidulin reports the distance bound and analyzes MRD") {
  auto f = (tmp_dir() / "gab.json").string();
  CHECK(run("construct gabidulin --q 2 --m 4 --n 4 --k 2 --out " + f).exit_code == 0);
  RunResult an = run("analyze " + f);
  CHECK(an.exit_code == 0);
  json j = json::parse(an.output);
  CHECK(j["d"] == 3);
  CHECK(j["class"] == "MRD");
}

TEST_CASE("construct rejects invalid parameters with exit 2") {
  CHECK(run("construct gabidulin --q 2 --m 6 --n 4 --k 5").exit_code == 2);
  CHECK(run("construct random --q 2 --n 3 --m 2 --t 2").exit_code == 2);
  CHECK(run("construct random --q 2 --n 2 --m 2 --t 4 --seed 1").exit_code == 2);
}

TEST_CASE("analyze reproduces the reference report") {
  std::string f = write_code_file(builtin_dually_3x3_t4(), "ex36.json");
  RunResult r = run("analyze " + f + " --checks all --weights");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["dually_amrd"] == true);
  CHECK(j["distribution"] == json({1, 6, 7, 2}));
  CHECK(j["dual_distribution"] == json({1, 9, 18, 4}));
  CHECK(j["generalized_weights"]["weights"] == json({1, 1, 2, 3}));
  CHECK(j["generalized_weights"]["i_mrd"]["degree"] == 1);
  for (const auto& c : j["checks"])
    if (c["applicable"] == true) CHECK(c["ok"] == true);
}

TEST_CASE("analyze csv output lists i,A_i,A_i_dual rows") {
  std::string f = write_code_file(builtin_dually_3x3_t4(), "ex36b.json");
  RunResult r = run("analyze " + f + " --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("i,A_i,A_i_dual\n0,1,1\n1,6,9\n", 0) == 0);
}

TEST_CASE("analyze classifies the AMRD-not-dually reference code") {
  std::string f = write_code_file(builtin_amrd_3x3_t5(), "rem46.json");
  RunResult r = run("analyze " + f);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["class"] == "AMRD");
  CHECK(j["dually_amrd"] == false);
}

TEST_CASE("analyze rejects trivial and malformed inputs with exit 2") {
  auto p = tmp_dir() / "zero.json";
  {
    std::ofstream out(p);
    out << R"({"kind":"matrix","field":{"q":2,"m":1,"modulus":[]},)"
        << R"("n":2,"m":2,"basis":[]})";
  }
  CHECK(run("analyze " + p.string()).exit_code == 2);
  auto bad = tmp_dir() / "bad.json";
  {
    std::ofstream out(bad);
    out << "{not json";
  }
  CHECK(run("analyze " + bad.string()).exit_code == 2);
  CHECK(run("analyze /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("budget cap from the environment yields exit 3") {
  std::string f = write_code_file(builtin_dually_3x3_t4(), "ex36c.json");
  CHECK(run("analyze " + f, "RANKCODE_BUDGET=10").exit_code == 3);
}

TEST_CASE("dual writes the dual code and is an involution") {
  std::string f = write_code_file(builtin_dually_3x3_t4(), "ex36d.json");
  auto d1 = (tmp_dir() / "d1.json").string();
  auto d2 = (tmp_dir() / "d2.json").string();
  CHECK(run("dual " + f + " --out " + d1).exit_code == 0);
  CHECK(run("dual " + d1 + " --out " + d2).exit_code == 0);
  AnyCode back = load_code(d2);
  REQUIRE(std::holds_alternative<MatrixCode>(back));
  CHECK(std::get<MatrixCode>(back) == builtin_dually_3x3_t4());
  AnyCode d = load_code(d1);
  CHECK(std::get<MatrixCode>(d).dim() == 5);
}

TEST_CASE("verify-paper single rows and the negative path") {
  RunResult ok = run("verify-paper --only example-3.6");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("PASS  example-3.6") != std::string::npos);
  RunResult bad = run("verify-paper --only prop-4.2 --inject-failure");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("FAIL  prop-4.2") != std::string::npos);
  CHECK(run("verify-paper --only no-such-claim").exit_code == 2);
}

TEST_CASE("search finds witnesses deterministically") {
  RunResult a = run("search --q 2 --n 3 --m 3 --t 4 --seeds 300");
  RunResult b = run("search --q 2 --n 3 --m 3 --t 4 --seeds 300");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  json j = json::parse(a.output);
  CHECK(j["examined"] == 300);
  for (const auto& w : j["witnesses"]) {
    AnyCode c = code_from_json(w);
    CodeReport r = classify(std::get<MatrixCode>(c));
    CHECK(r.dually_amrd);
  }
}

TEST_CASE("search with t < m yields an empty catalog") {
  RunResult r = run("search --q 2 --n 2 --m 2 --t 1 --exhaustive");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["count"] == 0);
  CHECK(j["examined"] == 15);
}
