#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(SU2CS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int run_stderr(const std::string& args, std::string& err) {
  const std::string cmd = std::string(SU2CS_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, n);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

using nlohmann::json;

}  // namespace

TEST_CASE("spectrum") {
  const Result r = run("spectrum --omega1 1 --omega2 1 --lambda 0 --j 1");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 3);
  for (const auto& e : j) CHECK(e["energy"].get<double>() == 2.0);
  CHECK(j[0]["mu"].get<double>() == -1.0);

  const json k = json::parse(run("spectrum --omega1 2 --omega2 1 --lambda 0.75 --j 0.5").out);
  CHECK(std::abs(k[0]["energy"].get<double>() - (1.5 - std::sqrt(13.0) / 4)) <= 1e-15);
}

TEST_CASE("pncs") {
  const Result r = run("pncs --j 0.5 --mu -0.5 --theta 1.5707963 --phi 0");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  for (const auto& a : j) {
    const double mag = std::hypot(a["re"].get<double>(), a["im"].get<double>());
    CHECK(std::abs(mag - std::sqrt(0.5)) <= 1e-7);
  }
  CHECK(j[1]["mu"].get<double>() == 0.5);
}

TEST_CASE("partition and evolve") {
  const Result p = run("partition --omega1 1 --omega2 1 --lambda 0 --j 0.5 --temperature 1 --mode paper");
  CHECK(p.code == 0);
  CHECK(std::abs(json::parse(p.out).get<double>() - 2.0 * std::exp(-1.0)) <= 1e-15);
  const Result e = run("partition --omega1 1 --omega2 1 --lambda 0 --j 0.5 --temperature 1 --mode exact");
  CHECK(std::abs(json::parse(e.out).get<double>() - 2.0 * std::exp(-1.0)) <= 1e-15);

  const Result t = run("evolve --omega1 1 --omega2 1 --lambda 0.3 --j 1 --mu 0 --t 0");
  CHECK(t.code == 0);
  const json z = json::parse(t.out);
  CHECK(z["re"].get<double>() == 1.0);
  CHECK(z["im"].get<double>() == 0.0);
}

TEST_CASE("wavefunction CSV") {
  const auto path = std::filesystem::temp_directory_path() / "su2cs_cli_test_grid.csv";
  const Result r = run("wavefunction --j 1 --mu 0 --theta 0.5 --phi 0.2 --n-rho 6 --n-angle 4 --out " + path.string());
  CHECK(r.code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "rho,angle,re,im");
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  CHECK(rows == 24);
  std::filesystem::remove(path);
}

TEST_CASE("usage and domain errors") {
  CHECK(run("").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("spectrum --omega1 1 --omega2 1 --lambda 0 --j 1 --bogus 3").code == 2);
  CHECK(run("spectrum --omega1 1 --omega2 1 --lambda 0").code == 2);
  CHECK(run("spectrum --omega1 1 --omega2 1 --lambda 0 --j 0.3").code == 2);
  CHECK(run("--help").code == 0);

  std::string err;
  CHECK(run_stderr("nonsense", err) == 2);
  CHECK_FALSE(err.empty());

  CHECK(run("pncs --j 1 --mu 0.5 --theta 0.1 --phi 0").code == 1);
  CHECK(run("pncs --j 1 --mu 0 --theta 3.2 --phi 0").code == 1);
  CHECK(run("partition --omega1 1 --omega2 1 --lambda 0 --j 1 --temperature -1").code == 1);
  CHECK(run("spectrum --omega1 -1 --omega2 1 --lambda 0 --j 1").code == 1);
  CHECK(run("partition --omega1 1 --omega2 1 --lambda 0 --j 1 --temperature 1 --mode other").code == 2);
}

TEST_CASE("verify on a small configuration is green and deterministic") {
  const Result a = run("verify --jmax 6 --nmax 12 --seed 42");
  CHECK(a.code == 0);
  const json report = json::parse(a.out);
  CHECK(report["overall"].get<bool>());
  for (const auto& c : report["checks"]) {
    CAPTURE(c.dump());
    CHECK(c["passed"].get<bool>());
  }
  const Result b = run("verify --jmax 6 --nmax 12 --seed 42");
  CHECK(a.out == b.out);

  const Result s1 = run("pncs --j 3.5 --mu 1.5 --theta 2.9 --phi 4.4");
  const Result s2 = run("pncs --j 3.5 --mu 1.5 --theta 2.9 --phi 4.4");
  CHECK(s1.out == s2.out);
}
