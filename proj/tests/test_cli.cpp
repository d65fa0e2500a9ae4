#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("FQF_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("mass subcommand verifies the smallest genus") {
  RunResult r = run("mass --q 3 --D t --enumerate");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "formula\t1/8"));
  CHECK(contains(r.out, "enumerated\t1/8"));
  CHECK(contains(r.out, "PASS"));
}

TEST_CASE("lpoly emits the constant polynomial for b = t") {
  RunResult r = run("lpoly --q 3 --b t");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0\t1"));
}

TEST_CASE("classno with oracle cross-check") {
  RunResult r = run("classno --q 3 --m 2*t^3+2*t --oracle");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "PASS"));
}

TEST_CASE("represent validates the weighted sum") {
  RunResult r = run("represent --q 3 --D t --a t+1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "PASS"));
}

TEST_CASE("JSON output carries the schema version") {
  RunResult r = run("genus --q 3 --D t --method exhaustive --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"schema\": 1"));
  CHECK(contains(r.out, "\"mass\": \"1/8\""));
}

TEST_CASE("deterministic output") {
  RunResult a = run("epstein --q 3 --D t --kmax 5 --twist phi_psi");
  RunResult b = run("epstein --q 3 --D t --kmax 5 --twist phi_psi");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("error taxonomy: distinct nonzero exit codes") {
  CHECK(run("mass --q 3 --D 't^'").exit_code == 3);       // malformed polynomial
  CHECK(run("mass --q 3 --D t^2").exit_code == 4);        // not squarefree
  CHECK(run("mass --q 3 --no-such-flag").exit_code == 2); // usage
  CHECK(run("represent --q 3 --D t --a t").exit_code == 4);  // not coprime
}
