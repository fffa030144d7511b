#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the verification binary with the given arguments, capturing stdout.
// stderr is dropped so expected-failure cases stay quiet in the test log.
CliResult run_cli(const std::string& args) {
  CliResult res;
  std::string cmd = std::string(PSCVER_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  res.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli curvature commands") {
  auto r = run_cli("curvature berger --field H --n 2 --s 1 --t 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "scal = 42"));

  r = run_cli("curvature berger --field R --n 4 --s 2 --t 7");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "scal = 3"));

  r = run_cli("curvature double --field C --n 2 --m 3 --s 1 --u 1 --t 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "scal = 26"));

  r = run_cli("curvature berger --field H --n 1 --s 1 --t 2/3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "scal = 9"));

  r = run_cli("curvature constants --field H --n 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "b = 48"));
  CHECK(contains(r.out, "c_fiber = 6"));
  CHECK(contains(r.out, "a = 12"));

  r = run_cli("curvature region --field C --n 2 --m 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "status = non_empty"));
  CHECK(contains(r.out, "witness"));

  r = run_cli("curvature region --field C --n 1 --m 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "status = empty"));

  r = run_cli("curvature dimension --field H --n 2 --m 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "dimension = 3"));

  r = run_cli("curvature wu-bounds");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "disc bound = 8"));
  CHECK(contains(r.out, "family bound = 6"));

  r = run_cli("curvature torpedo --k 3 --delta 1 --samples 64");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "min_scal = 2"));
}

TEST_CASE("cli characteristic number commands") {
  auto r = run_cli("charnum s-number --manifold cp4 --k 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "s_2(cp4) = 5"));

  r = run_cli("charnum s-number --manifold hp2 --k 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "= -10"));

  r = run_cli("charnum s-number --manifold 'cp2*cp2' --k 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "= 0"));

  r = run_cli("charnum s-number --manifold h_2_3 --k 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "= -10"));

  r = run_cli("charnum signature --manifold hp2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "signature = 1"));

  r = run_cli("charnum pontryagin --manifold hp2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "p_1 = "));

  r = run_cli("charnum generators --k 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "target = 7"));

  r = run_cli("charnum omega8");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "[hp2] = -2*[cp4] + 3*[cp2*cp2]"));
  CHECK(contains(r.out, "index = 3"));
}

TEST_CASE("cli arithmetic and homology commands") {
  auto r = run_cli("arith gcd-binom --n 9");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "gcd = 3"));

  r = run_cli("arith d-odd --k 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "d = 7"));

  r = run_cli("arith prime-power --n 1024");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "1024 = 2^10"));

  r = run_cli("arith prime-power --n 1000");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "not a prime power"));

  r = run_cli("homalg snf --matrix '1,1;-1,1'");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "d = 1,0;0,2"));
  CHECK(contains(r.out, "cokernel = Z/2"));

  r = run_cli("homalg cokernel --matrix '2,0;0,3'");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "cokernel = Z/6"));

  r = run_cli("homalg betti --ranks 1,0,0,0,0,1 --torsion 2:2 --field F2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "betti = 1 0 1 1 0 1"));

  r = run_cli("homalg semichar --ranks 1,0,0,0,0,1 --torsion 2:2 --field Q");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "semi-characteristic = 1"));

  r = run_cli("homalg lmp --ranks 1,0,0,0,0,1 --torsion 2:2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "difference = 1"));

  r = run_cli("homalg lmp --ranks 1,0,0,0,0,1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "difference = 0"));

  r = run_cli("homalg hilbert --degrees 4,5,6,8 --max-degree 8");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "coeffs = 1 0 0 0 1 1 1 0 2"));

  r = run_cli("homalg wall-degrees --max-degree 12");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "degrees = 4 5 6 8 9 10 11 12"));

  r = run_cli("homalg thom-degrees --max-degree 10");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "degrees = 2 4 5 6 8 9 10"));
}

TEST_CASE("cli rejects bad input with exit code 2") {
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("curvature").status == 2);
  CHECK(run_cli("curvature berger --field H --n 2 --s 1").status == 2);
  CHECK(run_cli("curvature berger --field X --n 2 --s 1 --t 1").status == 2);
  CHECK(run_cli("curvature berger --field H --n 2 --s 1/0 --t 1").status == 2);
  CHECK(run_cli("curvature berger --field H --n 2 --s nope --t 1").status == 2);
  CHECK(run_cli("curvature berger --field H --n 0 --s 1 --t 1").status == 2);
  CHECK(run_cli("charnum s-number --manifold sphere --k 2").status == 2);
  CHECK(run_cli("charnum s-number --manifold cp4 --k 3").status == 2);
  CHECK(run_cli("charnum chern --manifold hp2").status == 2);
  CHECK(run_cli("homalg snf --matrix '1,1;2'").status == 2);
  CHECK(run_cli("homalg betti --ranks 1,0,1 --field F4").status == 2);
  CHECK(run_cli("homalg semichar --ranks 1,0,1 --field Q").status == 2);
  CHECK(run_cli("homalg hilbert --degrees 0 --max-degree 4").status == 2);
}

TEST_CASE("cli json reports carry the full schema") {
  auto r = run_cli("curvature berger --field H --n 2 --s 1 --t 1 --json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "curvature berger");
  CHECK(j["inputs"]["field"] == "H");
  CHECK(j["inputs"]["n"] == 2);
  CHECK(j["inputs"]["s"] == "1");
  CHECK(j["result"]["scal"] == "42");
  CHECK(j["paper_refs"].is_array());
  CHECK(j["paper_refs"].size() > 0);
  CHECK(j["status"] == "ok");
  CHECK_FALSE(j.contains("timestamp"));

  r = run_cli("curvature berger --field C --n 2 --s 1 --t 1/3 --json");
  REQUIRE(r.status == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["inputs"]["t"] == "1/3");
  CHECK(j["result"]["scal"] == "22/3");

  r = run_cli("homalg snf --matrix '1,1;-1,1' --json");
  REQUIRE(r.status == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["d"][0][0] == "1");
  CHECK(j["result"]["d"][1][1] == "2");
  CHECK(j["result"]["cokernel"]["free_rank"] == 0);
  CHECK(j["result"]["cokernel"]["torsion"][0] == "2");

  r = run_cli("curvature region --field C --n 1 --m 1 --json");
  REQUIRE(r.status == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["status"] == "empty");
  CHECK(j["result"]["witness"].is_null());

  r = run_cli("curvature berger --field H --n 2 --s 1 --t 1 --json "
              "--timestamps");
  REQUIRE(r.status == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j.contains("timestamp"));
}

TEST_CASE("cli output is reproducible without timestamps") {
  const std::string cmd =
      "charnum generators --k 4 --json";
  auto first = run_cli(cmd);
  auto second = run_cli(cmd);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);

  const std::string sweep = "sweep-region --field C --n 2 --m 2 --grid 16";
  auto s1 = run_cli(sweep);
  auto s2 = run_cli(sweep);
  CHECK(s1.status == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("cli sweep CSV output") {
  auto r = run_cli("sweep-region --field C --n 1 --m 1 --grid 8");
  REQUIRE(r.status == 0);
  REQUIRE(contains(r.out, "x,y,feasible\n"));
  std::size_t lines = 0;
  std::size_t feasible_rows = 0;
  std::size_t pos = 0;
  while ((pos = r.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 65);  // header + 8*8 rows
  pos = r.out.find('\n') + 1;
  while (pos < r.out.size()) {
    std::size_t end = r.out.find('\n', pos);
    std::string row = r.out.substr(pos, end - pos);
    REQUIRE(row.size() >= 5);
    if (row.back() == '1') ++feasible_rows;
    else CHECK(row.substr(row.size() - 2) == ",0");
    pos = end + 1;
  }
  CHECK(feasible_rows == 0);

  r = run_cli("sweep-region --field R --n 3 --m 3 --grid 8");
  REQUIRE(r.status == 0);
  pos = r.out.find('\n') + 1;
  while (pos < r.out.size()) {
    std::size_t end = r.out.find('\n', pos);
    std::string row = r.out.substr(pos, end - pos);
    CHECK(row.substr(row.size() - 2) == ",1");
    pos = end + 1;
  }
}

TEST_CASE("cli writes reports to a file with --output") {
  const char* path = "cli_output_check.txt";
  std::remove(path);
  auto r = run_cli(std::string("curvature berger --field H --n 2 --s 1 "
                               "--t 1 --output ") + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  CHECK(contains(content, "scal = 42"));
  f.close();
  std::remove(path);
}

TEST_CASE("cli timestamps are additive and clearly labeled") {
  auto r = run_cli("curvature wu-bounds --timestamps");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "generated at "));
  r = run_cli("curvature wu-bounds");
  CHECK(r.status == 0);
  CHECK_FALSE(contains(r.out, "generated at "));
}
