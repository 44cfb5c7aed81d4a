#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string out_path = std::filesystem::temp_directory_path() / "lieq_cli_out.txt";
  std::string cmd = std::string(LIEQ_CLI_PATH) + " --fixtures " + LIEQ_FIXTURES + " " + args +
                    " > " + out_path + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string fixture(const std::string& name) {
  return std::string(LIEQ_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("build prints dimension and jacobi summary") {
  auto r = run("build G 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "dim 14"));
  CHECK(contains(r.output, "jacobi: exhaustive pass"));
  auto a1 = run("build A 1");
  CHECK(a1.exit_code == 0);
  CHECK(contains(a1.output, "dim 3"));
}

TEST_CASE("invalid input yields usage exit code") {
  CHECK(run("build Z 9").exit_code == 2);
  CHECK(run("check missing.pair classify").exit_code == 2);
  CHECK(run("check " + fixture("so7-g2.pair") + " no-such-check").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("torus-only pairs are refused with a pointer to the case replay") {
  auto r = run("check " + fixture("case1.pair") + " finsler-space");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "torus-only guard"));
  CHECK(contains(r.output, "case 1"));
}

TEST_CASE("finsler space check on the spin7/g2 fixture") {
  auto r = run("check " + fixture("so7-g2.pair") + " finsler-space");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "holds-probabilistically"));
  CHECK(contains(r.output, "seed 2024"));
}

TEST_CASE("classify labels the g2/su3 fixture") {
  auto r = run("check " + fixture("g2-su3.pair") + " classify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "factor labels: g2-su3"));
  CHECK(contains(r.output, "finsler equigeodesic: yes"));
}

TEST_CASE("case replay diffs cleanly against the golden report") {
  auto r = run("case 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "result: pass"));
  CHECK(contains(r.output, "golden diff: clean"));
}

TEST_CASE("table2 regenerates and diffs cleanly") {
  auto r = run("table2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "table2 rows: 9"));
  CHECK(contains(r.output, "golden diff: clean"));
}

TEST_CASE("reports are byte-deterministic across runs") {
  auto a = run("--format records table2");
  auto b = run("--format records table2");
  CHECK(a.output == b.output);
  auto c = run("check " + fixture("so5-so3so2.pair") + " symmetric");
  auto d = run("check " + fixture("so5-so3so2.pair") + " symmetric");
  CHECK(c.output == d.output);
  CHECK(contains(c.output, "symmetric: yes"));
}

TEST_CASE("cache round trip and corruption recovery") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lieq_cache_test";
  fs::remove_all(dir);
  auto first = run("--cache-dir " + dir.string() + " build C 3");
  CHECK(first.exit_code == 0);
  CHECK(contains(first.output, "source: built"));
  auto second = run("--cache-dir " + dir.string() + " build C 3");
  CHECK(second.exit_code == 0);
  CHECK(contains(second.output, "source: cache"));
  // corrupt the entry: the loader must warn and rebuild, never crash
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ofstream out(e.path(), std::ios::binary);
    out << "garbage\n";
  }
  auto third = run("--cache-dir " + dir.string() + " build C 3");
  CHECK(third.exit_code == 0);
  CHECK(contains(third.output, "warning"));
  CHECK(contains(third.output, "source: built"));
  auto fourth = run("--cache-dir " + dir.string() + " build C 3");
  CHECK(contains(fourth.output, "source: cache"));
  fs::remove_all(dir);
}

TEST_CASE("environment variable overrides the cache directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lieq_cache_env";
  fs::remove_all(dir);
  std::string out_path = fs::temp_directory_path() / "lieq_cli_out.txt";
  std::string cmd = std::string("LIEQ_CACHE_DIR=") + dir.string() + " " + LIEQ_CLI_PATH +
                    " build B 2 > " + out_path + " 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(fs::exists(dir / "B2-v1.scache"));
  fs::remove_all(dir);
}
