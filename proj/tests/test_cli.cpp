#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Command-level tests drive the built binary; the path arrives via the
// BDC_CLI environment variable set by ctest.

namespace {

struct CommandResult {
  int status = -1;
  std::string output;
};

const char* cli_path() { return std::getenv("BDC_CLI"); }

CommandResult run_command(const std::string& args) {
  CommandResult res;
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) res.output += buf.data();
  const int raw = pclose(pipe);
  res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli bounds writes the expected small grid") {
  if (cli_path() == nullptr) return;
  const std::string out = "cli_test_small.csv";
  const auto res = run_command("bounds --bounds c1,c4 --d-min 0 --d-max 1 --d-step 0.25 --out " + out);
  CHECK(res.status == 0);
  const std::string text = slurp(out);
  // 5 data rows, d = 0 row reads 0,1,1
  CHECK(text.find("d,c1,c4\n0,1,1\n") != std::string::npos);
  int data_rows = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line[0] != 'd') ++data_rows;
  }
  CHECK(data_rows == 5);
  std::remove(out.c_str());
}

TEST_CASE("cli bounds includes the level columns") {
  if (cli_path() == nullptr) return;
  const std::string out = "cli_test_tl.csv";
  const auto res = run_command("bounds --bounds tl --L-max 3 --d-min 0 --d-max 1 --d-step 0.5 --out " + out);
  CHECK(res.status == 0);
  const std::string text = slurp(out);
  CHECK(text.find("d,t1,t2,t3\n") != std::string::npos);
  // t3(0) = f(3,3)/3 = 1
  CHECK(text.find("\n0,1,1,1\n") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli bounds reads a config file and flags override it") {
  if (cli_path() == nullptr) return;
  {
    std::ofstream conf("cli_test.conf", std::ios::binary);
    conf << "[bounds]\nbounds=c1,c4\nd-min=0\nd-max=1\nd-step=0.25\n"
            "out=cli_test_conf.csv\n";
  }
  CHECK(run_command("bounds --config cli_test.conf").status == 0);
  CHECK(slurp("cli_test_conf.csv").find("d,c1,c4\n0,1,1\n") != std::string::npos);
  // the command line wins over the file
  CHECK(run_command("bounds --config cli_test.conf --d-step 0.5 --out cli_test_conf2.csv")
            .status == 0);
  int rows = 0;
  std::istringstream lines(slurp("cli_test_conf2.csv"));
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line[0] != 'd') ++rows;
  }
  CHECK(rows == 3);
  std::remove("cli_test.conf");
  std::remove("cli_test_conf.csv");
  std::remove("cli_test_conf2.csv");
}

TEST_CASE("cli bounds rejects unknown identifiers with a usage error") {
  if (cli_path() == nullptr) return;
  const auto res = run_command("bounds --bounds nosuch --out cli_test_bad.csv");
  CHECK(res.status == 2);
}

TEST_CASE("cli bounds output is byte-identical across runs") {
  if (cli_path() == nullptr) return;
  const std::string args =
      "bounds --bounds c1,c2,c3,c4,erasure,dg_lower --d-min 0 --d-max 1 --d-step 0.1 --out ";
  CHECK(run_command(args + "cli_test_rep1.csv").status == 0);
  CHECK(run_command(args + "cli_test_rep2.csv").status == 0);
  const std::string a = slurp("cli_test_rep1.csv");
  CHECK_FALSE(a.empty());
  CHECK(a == slurp("cli_test_rep2.csv"));
  std::remove("cli_test_rep1.csv");
  std::remove("cli_test_rep2.csv");
}

TEST_CASE("cli fibdc prints the anchor values") {
  if (cli_path() == nullptr) return;
  const auto res = run_command("fibdc --L 1 --d 0.3");
  CHECK(res.status == 0);
  CHECK(res.output.find("f(1,0) = 0") != std::string::npos);
  CHECK(res.output.find("f(1,1) = 1") != std::string::npos);
  CHECK(res.output.find("C_1 = 0.7") != std::string::npos);
  CHECK(res.output.find("T_1 = 0.7") != std::string::npos);
}

TEST_CASE("cli fibdc golden report at L=4, d=0.5") {
  if (cli_path() == nullptr) return;
  // frozen from the first converged run: ./bdc fibdc --L 4 --d 0.5 --tol 1e-10
  const auto res = run_command("fibdc --L 4 --d 0.5 --tol 1e-10");
  CHECK(res.status == 0);
  CHECK(res.output.find("f(4,2) = 1.34728639811") != std::string::npos);
  CHECK(res.output.find("f(4,3) = 2.1699250014") != std::string::npos);
  CHECK(res.output.find("C_4 = 1.32936501283") != std::string::npos);
}

TEST_CASE("cli fibdc at d=0 reports the noiseless values") {
  if (cli_path() == nullptr) return;
  const auto res = run_command("fibdc --L 2 --d 0");
  CHECK(res.status == 0);
  CHECK(res.output.find("C_2 = 2") != std::string::npos);
  CHECK(res.output.find("T_2 = 1") != std::string::npos);
}

TEST_CASE("cli fibdc rejects an over-cap level") {
  if (cli_path() == nullptr) return;
  CHECK(run_command("fibdc --L 13 --d 0.5").status == 2);
}

TEST_CASE("cli matrix exports both kinds") {
  if (cli_path() == nullptr) return;
  CHECK(run_command("matrix --L 2 --R 1 --out cli_test_fifo.csv").status == 0);
  CHECK(slurp("cli_test_fifo.csv") ==
        "input,0,1\n00,1,0\n01,0.5,0.5\n10,0.5,0.5\n11,0,1\n");
  std::remove("cli_test_fifo.csv");

  CHECK(run_command("matrix --L 1 --d 0.5 --out cli_test_fi.csv").status == 0);
  CHECK(slurp("cli_test_fi.csv") == "input,0,1,\n0,0.5,0,0.5\n1,0,0.5,0.5\n");
  std::remove("cli_test_fi.csv");

  // the full matrix needs d
  CHECK(run_command("matrix --L 2 --out cli_test_nod.csv").status == 2);
  std::remove("cli_test_nod.csv");
}

TEST_CASE("cli matrix reports unwritable paths as io errors") {
  if (cli_path() == nullptr) return;
  CHECK(run_command("matrix --L 1 --d 0.5 --out /nonexistent-dir/x.csv").status == 3);
}

TEST_CASE("cli simulate agrees with the analytic value") {
  if (cli_path() == nullptr) return;
  const auto res = run_command("simulate --gamma 0.7 --d 0.4 --n 20000 --trials 5 --seed 42");
  CHECK(res.status == 0);
  CHECK(res.output.find("q_analytic = 0.642857142857") != std::string::npos);
  CHECK(res.output.find("z_score") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  if (cli_path() == nullptr) return;
  CHECK(run_command("").status == 2);
  CHECK(run_command("nosuchcommand").status == 2);
  CHECK(run_command("simulate --gamma 0.7").status == 2);  // missing --d
  CHECK(run_command("--help").status == 0);
}
