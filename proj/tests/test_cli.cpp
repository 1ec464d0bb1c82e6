// Exercises the installed CLI binary end to end: flag validation, exit codes,
// and file emission. The binary path comes from the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grover/io.hpp"

namespace {

const std::string kCli = GROVER_CLI_PATH;

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("simulate exit codes") {
  CHECK(run("simulate --n 2 --v0 0.5") == 0);
  CHECK(run("simulate --n 1000 --one-minus-v0 2e-6 --precision extended") == 0);
  CHECK(run("simulate --n 1.5 --v0 0.5") == 1);             // N < 2
  CHECK(run("simulate --n 100 --v0 1.5") == 1);             // v0 out of range
  CHECK(run("simulate --n 100") == 1);                      // no v0 at all
  CHECK(run("simulate --n 100 --v0 0.1 --one-minus-v0 0.9") == 1);
  CHECK(run("simulate --n 100 --v0 0.001 --max-iter 2") == 2);  // iteration limit
}

TEST_CASE("predict exit codes") {
  CHECK(run("predict --n 10000") == 0);
  CHECK(run("predict --v0 0.01") == 0);
  CHECK(run("predict") == 1);
}

TEST_CASE("simulate writes a parseable trajectory") {
  const std::string path = "cli_traj_test.json";
  CHECK(run("simulate --n 100 --v0 0.01 --trajectory " + path) == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j;
  f >> j;
  CHECK(j["n"].get<double>() == 100.0);
  CHECK(j["precision"] == "standard");
  CHECK(j["v0_or_one_minus_v0"]["kind"] == "v0");
  const auto points = grover::parse_trajectory(j);
  CHECK(points.size() > 1);
  std::remove(path.c_str());
}

TEST_CASE("sweep emits the documented CSV schema deterministically") {
  const std::string cmd =
      "sweep --n-list 100,1000 --v0-list 0.01,0.1 --classical --format csv";
  CHECK(run(cmd + " --out cli_sweep_a.csv --jobs 1") == 0);
  CHECK(run(cmd + " --out cli_sweep_b.csv --jobs 4") == 0);
  const std::string a = slurp("cli_sweep_a.csv");
  const std::string b = slurp("cli_sweep_b.csv");
  REQUIRE(!a.empty());
  CHECK(a == b);
  CHECK(a.rfind(std::string(grover::kSweepCsvHeader) + "\n", 0) == 0);
  std::remove("cli_sweep_a.csv");
  std::remove("cli_sweep_b.csv");
}

TEST_CASE("sweep rejects bad arguments") {
  CHECK(run("sweep --v0-list 0.1") == 1);                        // missing n-list
  CHECK(run("sweep --n-list 100") == 1);                         // missing v0 lists
  CHECK(run("sweep --n-list 100,50 --v0-list 0.1") == 1);        // not increasing
  CHECK(run("sweep --n-list 1e2:1e4:x-log --v0-list 0.1") == 1); // malformed range
  CHECK(run("sweep --n-list 100 --v0-list 0.1 --out /nonexistent/dir/f.csv") == 1);
}

TEST_CASE("log-spaced n-list runs end to end") {
  CHECK(run("sweep --n-list 1e2:1e4:3-log --v0-list 0.1 --format json") == 0);
}
