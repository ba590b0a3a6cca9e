// End-to-end checks of the CLI binary: argv[1] is the path to it.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("distribution csv for n = 1") {
  RunResult r = run("distribution --n 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "atom,weight\n-1,0.5\n1,0.5\n");
}

TEST_CASE("distribution json for n = 2") {
  RunResult r = run("distribution --n 2 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("atoms").size() == 4);
  CHECK(j.at("atoms")[0].get<double>() == doctest::Approx(-1.618033988749895));
  CHECK(j.at("atoms")[3].get<double>() == doctest::Approx(1.618033988749895));
  CHECK(j.at("weights")[3].get<double>() == doctest::Approx(0.3618033988749895));
  CHECK(j.at("precision_bits").get<int>() > 0);
  CHECK(j.at("label") == "mu_2");
}

TEST_CASE("distribution rejects n = 0 with a usage exit") {
  RunResult r = run("distribution --n 0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cap override via MONOFOCK_CAP_N") {
  RunResult deny = run("distribution --n 25 --format csv");
  CHECK(deny.exit_code == 2);
  RunResult allow =
      run("distribution --n 5 --format csv");
  CHECK(allow.exit_code == 0);
  setenv("MONOFOCK_CAP_N", "4", 1);
  RunResult denied_now = run("distribution --n 5 --format csv");
  CHECK(denied_now.exit_code == 2);
  unsetenv("MONOFOCK_CAP_N");
}

TEST_CASE("verify fock suite exits zero") {
  RunResult r = run("verify --suite fock");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("counts").at("fail") == 0);
}

TEST_CASE("verify binomial suite flags the wei1 comparison") {
  RunResult r = run("verify --suite binomial");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool flagged = false;
  for (const auto& c : j.at("checks"))
    if (c.at("name") == "wei1_printed_formula_comparison" &&
        c.at("status") == "flagged")
      flagged = true;
  CHECK(flagged);
}

TEST_CASE("plot writes a deterministic stem svg") {
  RunResult r1 = run("plot --n 1 --out /tmp/monofock_n1.svg");
  CHECK(r1.exit_code == 0);
  std::string svg = slurp("/tmp/monofock_n1.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  // two stems of height 0.5 at +-1: two stem lines + two markers
  int stems = 0;
  for (std::size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos;
       ++stems, ++pos) {
  }
  CHECK(stems == 2);
  RunResult r2 = run("plot --n 1 --out /tmp/monofock_n1_again.svg");
  CHECK(r2.exit_code == 0);
  CHECK(slurp("/tmp/monofock_n1_again.svg") == svg);  // byte deterministic

  RunResult r4 = run("plot --n 4 --out /tmp/monofock_n4.svg");
  CHECK(r4.exit_code == 0);
  std::string svg4 = slurp("/tmp/monofock_n4.svg");
  int stems4 = 0;
  for (std::size_t pos = 0; (pos = svg4.find("<circle", pos)) != std::string::npos;
       ++stems4, ++pos) {
  }
  CHECK(stems4 == 16);

  RunResult deny = run("plot --n 13");
  CHECK(deny.exit_code == 2);
}

TEST_CASE("clt table is increasing and bounded") {
  RunResult r = run("clt --max-n 20");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,max_atom,ratio,ks_distance");
  double prev_ratio = 0;
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    int n;
    double max_atom, ratio, ks;
    ls >> n >> max_atom >> ratio >> ks;
    CHECK(ratio > prev_ratio);
    CHECK(ratio < 1.41421357);
    prev_ratio = ratio;
    ++rows;
  }
  CHECK(rows == 20);
}

TEST_CASE("norm subcommand reports the relabeled block norm") {
  RunResult r = run("norm --indices 1,3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("norm").get<double>() == doctest::Approx(1.6180339887).epsilon(1e-10));
  CHECK(j.at("equals_contiguous") == true);
  RunResult bad = run("norm --indices 3,1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("polys exact dump") {
  RunResult r = run("polys --m 2 --exact");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> want{"1", "0", "-3", "0", "1"};
  REQUIRE(j.at("P").at("coefficients").size() == 5);
  for (int i = 0; i < 5; ++i)
    CHECK(j.at("P").at("coefficients")[i].get<std::string>() == want[i]);
  CHECK(j.at("P").at("degree") == 4);
  CHECK(j.at("Q").at("degree") == 2);
}

TEST_CASE("counterexample prints the exact zero coordinate") {
  RunResult r = run("counterexample");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("orbit_dimension: 4") != std::string::npos);
  CHECK(r.out.find("e2_coordinate: 0\n") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-monofock-binary>\n");
    return 1;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
