// End-to-end tests that drive the installed binary through a shell, checking
// output bytes and exit codes (0 ok, 1 counterexample, 2 usage, 3 budget).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::string tag =
      std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const std::filesystem::path out_path = dir / ("qseries_cli_out_" + tag);
  const std::filesystem::path err_path = dir / ("qseries_cli_err_" + tag);

  std::string cmd = env_prefix;
  if (!cmd.empty()) cmd += " ";
  cmd += "\"" QSERIES_CLI_PATH "\" " + args + " > \"" + out_path.string() +
         "\" 2> \"" + err_path.string() + "\"";

  RunResult result;
  const int status = std::system(cmd.c_str());
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

}  // namespace

TEST_CASE("expand prints partition numbers for 1/f1") {
  const RunResult r = run_cli("expand 'f1^-1' --n 9");
  CHECK(r.code == 0);
  CHECK(r.out == "1, 1, 2, 3, 5, 7, 11, 15, 22, 30\n");
}

TEST_CASE("expand reduces modulo --mod") {
  const RunResult r = run_cli("expand 'f1^-1 * f2^-1' --n 5 --mod 7");
  CHECK(r.code == 0);
  CHECK(r.out == "1, 1, 3, 4, 2, 5\n");
}

TEST_CASE("expand emits csv and json") {
  const RunResult csv = run_cli("expand 'f1^-1' --n 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,coefficient\n0,1\n1,1\n2,2\n");

  const RunResult json = run_cli("expand 'f1^-1' --n 2 --format json");
  CHECK(json.code == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["ring"] == "Z");
  CHECK(j["trunc"] == 2);
  CHECK(j["coefficients"] == nlohmann::json({"1", "1", "2"}));
}

TEST_CASE("expand handles multi-factor quotients") {
  const RunResult r = run_cli("expand 'f2^3 * f1^-1' --n 6");
  CHECK(r.code == 0);
  CHECK(r.out == "1, 1, -1, 0, -1, -2, 1\n");
}

TEST_CASE("--output writes the file and keeps stdout empty") {
  const std::filesystem::path target =
      std::filesystem::temp_directory_path() /
      ("qseries_cli_target_" + std::to_string(::getpid()));
  const RunResult r =
      run_cli("expand 'f1^-1' --n 3 --output \"" + target.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(target) == "1, 1, 2, 3\n");
  std::filesystem::remove(target);
}

TEST_CASE("malformed expressions exit 2") {
  const RunResult r = run_cli("expand 'g3' --n 5");
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error:") != std::string::npos);
}

TEST_CASE("missing required options exit 2") {
  CHECK(run_cli("expand 'f1^-1'").code == 2);
  CHECK(run_cli("verify --A 5 --B 4 --mod 5").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
}

TEST_CASE("oracle evaluates one value") {
  const RunResult r = run_cli("oracle --c 2 --n 4");
  CHECK(r.code == 0);
  CHECK(r.out == "9\n");

  const RunResult json = run_cli("oracle --c 2 --n 4 --format json");
  CHECK(nlohmann::json::parse(json.out)["value"] == "9");

  CHECK(run_cli("oracle --c 0 --n 4").code == 2);
  CHECK(run_cli("oracle --c 2 --n -1").code == 2);
}

TEST_CASE("verify exits 0 on a true claim") {
  const RunResult r =
      run_cli("verify --family classical --A 5 --B 4 --mod 5 --terms 100");
  CHECK(r.code == 0);
  CHECK(r.out == "[ok]   p(5n+4) = 0 mod 5 | n <= 100\n");
}

TEST_CASE("verify exits 1 on a counterexample") {
  const RunResult r =
      run_cli("verify --family classical --A 5 --B 3 --mod 5 --terms 100");
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] p(5n+3) = 0 mod 5") == 0);
  CHECK(r.out.find("counterexample at n=") != std::string::npos);
}

TEST_CASE("verify covers the cubic family") {
  const RunResult r =
      run_cli("verify --family cubic --c 103 --A 49 --B 31 --mod 7 --terms 20");
  CHECK(r.code == 0);
  CHECK(r.out == "[ok]   a_103(49n+31) = 0 mod 7 | n <= 20\n");
}

TEST_CASE("verify rejects bad parameters with exit 2") {
  CHECK(run_cli("verify --family cubic --c 0 --A 5 --B 4 --mod 5 --terms 10")
            .code == 2);
  CHECK(run_cli("verify --family classical --A 5 --B 4 --mod 5 --terms 10 "
                "--format csv")
            .code == 2);
}

TEST_CASE("verify emits report JSON") {
  const RunResult r = run_cli(
      "verify --family classical --A 5 --B 4 --mod 5 --terms 50 --format json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "verified");
  CHECK(j["range"]["n_max"] == 50);
}

TEST_CASE("replay exits 0 and prints one line per step") {
  const RunResult r = run_cli("replay --prime 7 --cmax 0 --n 100");
  CHECK(r.code == 0);
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 7);
  CHECK(r.out.find("[ok]   f2^7 = f14 mod 7") == 0);
  CHECK(r.out.find("mod7 c=0 final-congruence") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("replay validates its arguments") {
  CHECK(run_cli("replay --prime 5 --cmax 0 --n 100").code == 2);
  CHECK(run_cli("replay --prime 7 --cmax 0 --n 79").code == 2);
}

TEST_CASE("the coefficient budget trips exit 3") {
  const RunResult r =
      run_cli("expand 'f1^-1' --n 200", "Q_MAX_TRUNC=100");
  CHECK(r.code == 3);
  CHECK(r.err.find("budget exceeded:") == 0);
  CHECK(r.err.find("Q_MAX_TRUNC") != std::string::npos);

  CHECK(run_cli("replay --prime 7 --cmax 0 --n 5000", "Q_MAX_TRUNC=1000")
            .code == 3);
}

TEST_CASE("scan prints JSON lines in plain format") {
  const RunResult r = run_cli("scan --mod 5 --A 5,7 --terms 199");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int claims = 0;
  int reports = 0;
  while (std::getline(lines, line)) {
    const nlohmann::json j = nlohmann::json::parse(line);
    if (j.contains("family")) {
      ++claims;
      CHECK(j["id"] == "p(5n+4) = 0 mod 5");
      CHECK(j["witnesses"] == 200);
    } else {
      ++reports;
      CHECK(j["status"] == "verified");
    }
  }
  CHECK(claims == 1);
  CHECK(reports == 2);
}

TEST_CASE("scan --format json bundles candidates and reports") {
  const RunResult r = run_cli("scan --mod 5 --A 5 --terms 199 --format json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["candidates"].size() == 1);
  CHECK(j["candidates"][0]["offset"] == 4);
  CHECK(j["reports"].size() == 1);
}

TEST_CASE("scan output is identical across thread counts") {
  const std::string args = "scan --family cubic --c 2 --mod 5 --A 5,25,30 "
                           "--terms 99";
  const RunResult one = run_cli(args + " --threads 1");
  const RunResult four = run_cli(args + " --threads 4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("the NTT path changes nothing observable") {
  const std::string args = "expand 'f1^-3 * f2^-4' --n 400 --mod 998244353";
  const RunResult plain = run_cli(args);
  const RunResult fast = run_cli(args + " --accelerated-multiply");
  CHECK(plain.code == 0);
  CHECK(fast.code == 0);
  CHECK(plain.out == fast.out);
}

TEST_CASE("--help exits 0") {
  const RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("expand") != std::string::npos);
  CHECK(run_cli("verify --help").code == 0);
}
