// End-to-end tests of the qbern binary: output bytes and the exit-code
// contract (0 ok, 1 verification failure, 2 usage, 3 resource/pole).
// The binary path arrives in QBERN_CLI, the fixture dir in QBERN_GOLDEN_DIR.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string required_env(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, "missing env var ", name);
  return v;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  auto out_path = std::filesystem::temp_directory_path() /
                  ("qbern_cli_test_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter++) + ".out");
  std::string cmd = env_prefix + required_env("QBERN_CLI") + " " + args + " > " +
                    out_path.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  std::filesystem::remove(out_path);
  return r;
}

} // namespace

TEST_CASE("compute prints canonical values") {
  auto beta2 = run_cli("compute --family carlitz-number --n 2");
  CHECK(beta2.exit_code == 0);
  CHECK(beta2.out == "q / (q^3 + 2*q^2 + 2*q + 1)\n");

  auto d0 = run_cli("compute --family degenerate --n 0");
  CHECK(d0.exit_code == 0);
  CHECK(d0.out == "1\n");

  auto b4 = run_cli("compute --family carlitz-number --n 4 --at q=1");
  CHECK(b4.exit_code == 0);
  CHECK(b4.out == "-1/30\n");

  auto order = run_cli("compute --family order-r --n 1 --r 2");
  CHECK(order.exit_code == 0);
  CHECK(order.out.find(" / ") != std::string::npos);
}

TEST_CASE("limit defaults per family") {
  auto b12 = run_cli("limit --family carlitz-number --n 12");
  CHECK(b12.exit_code == 0);
  CHECK(b12.out == "-691/2730\n");

  // degenerate limit L -> 0 equals the classical polynomial
  auto lim = run_cli("limit --family degenerate --n 3");
  auto classical = run_cli("compute --family carlitz-poly --n 3");
  CHECK(lim.exit_code == 0);
  CHECK(lim.out == classical.out);
}

TEST_CASE("formats: json round-trips, latex recognizes bracket factors") {
  auto js = run_cli("compute --family carlitz-number --n 2 --format json");
  CHECK(js.exit_code == 0);
  auto parsed = nlohmann::json::parse(js.out);
  CHECK(parsed.contains("num"));
  CHECK(parsed.contains("den"));

  auto latex = run_cli("compute --family carlitz-number --n 2 --format latex");
  CHECK(latex.exit_code == 0);
  CHECK(latex.out == "\\frac{q}{[2]_{q}[3]_{q}}\n");
}

TEST_CASE("usage and pole errors map to exit codes 2 and 3") {
  CHECK(run_cli("compute --family no-such-family --n 1").exit_code == 2);
  CHECK(run_cli("compute --family order-r --n 1").exit_code == 2); // missing --r
  CHECK(run_cli("compute --family carlitz-number").exit_code == 2); // missing --n
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("compute --family carlitz-number --n 2 --at q=x").exit_code == 2);
  // [x]_q has a genuine pole at q = 1 while Q stays symbolic
  CHECK(run_cli("compute --family carlitz-poly --n 1 --at q=1").exit_code == 3);
  // evaluation on a vanishing denominator: beta_1 at q = -1
  CHECK(run_cli("compute --family carlitz-number --n 1 --at q=-1").exit_code == 3);
}

TEST_CASE("table output is deterministic and matches the golden fixture") {
  auto golden_dir = required_env("QBERN_GOLDEN_DIR");
  auto first = run_cli("table --family carlitz-number --max-n 3");
  auto second = run_cli("table --family carlitz-number --max-n 3");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == read_file(std::filesystem::path(golden_dir) /
                               "carlitz_number_table.json"));

  auto deg1 = run_cli("table --family degenerate --max-n 6");
  auto deg2 = run_cli("table --family degenerate --max-n 6");
  CHECK(deg1.exit_code == 0);
  CHECK(deg1.out == deg2.out);

  CHECK(run_cli("table --family carlitz-number --max-n -1").exit_code == 2);
  CHECK(run_cli("table --family carlitz-number --max-n 2 --out /no/such/dir/t.json")
            .exit_code == 2);
  CHECK(run_cli("table --family order-r --max-n 2").exit_code == 2); // missing --r
}

TEST_CASE("verify exit codes encode expectations") {
  auto t4 = run_cli("verify --identity T4 --max-n 6");
  CHECK(t4.exit_code == 0);

  auto variant = run_cli("verify --identity T9-paper-variant");
  CHECK(variant.exit_code == 0); // expected failure counts as success
  auto parsed = nlohmann::json::parse(variant.out);
  CHECK(parsed[0]["status"] == "fail");
  CHECK(parsed[0]["counterexample"]["params"]["n"] == 1);

  // an empty grid makes the variant pass, which violates its expectation
  auto vacuous = run_cli("verify --identity T9-paper-variant --max-n 0");
  CHECK(vacuous.exit_code == 1);

  CHECK(run_cli("verify --identity T3").exit_code == 2);

  auto budget = run_cli("verify --identity T8 --max-n 5", "QBERN_BUDGET_TERMS=10 ");
  CHECK(budget.exit_code == 3);
  auto budget_report = nlohmann::json::parse(budget.out);
  CHECK(budget_report[0]["status"] == "error");
}

TEST_CASE("verify all with small bounds meets every expectation") {
  auto all = run_cli("verify --identity all --max-n 3 --m 2 --max-r 2 --max-j 3 --jobs 2");
  CHECK(all.exit_code == 0);
  auto parsed = nlohmann::json::parse(all.out);
  REQUIRE(parsed.size() == 11);
  int fails = 0;
  for (const auto& rep : parsed)
    if (rep["status"] == "fail") ++fails;
  CHECK(fails == 1);
}

TEST_CASE("verify writes the report file given --out") {
  auto path = std::filesystem::temp_directory_path() /
              ("qbern_report_" + std::to_string(::getpid()) + ".json");
  auto r = run_cli("verify --identity T2 --max-n 2 --out " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  auto parsed = nlohmann::json::parse(read_file(path));
  CHECK(parsed[0]["identity_id"] == "T2");
  CHECK(parsed[0]["status"] == "pass");
  std::filesystem::remove(path);
}

TEST_CASE("padic subcommand reports convergence") {
  auto ok = run_cli("padic --p 3 --precision 15 --levels 2,4,6 --n 1");
  CHECK(ok.exit_code == 0);
  auto parsed = nlohmann::json::parse(ok.out);
  CHECK(parsed["p"] == 3);
  CHECK(parsed["levels"].size() == 3);
  long prev = -1000;
  for (const auto& lv : parsed["levels"]) {
    long v = lv["valuation"].get<long>();
    CHECK(v >= prev);
    prev = v;
  }

  auto exact = run_cli("padic --p 3 --precision 15 --levels 2 --n 0");
  CHECK(exact.exit_code == 0);
  auto exact_parsed = nlohmann::json::parse(exact.out);
  CHECK(exact_parsed["levels"][0]["exact"] == true);

  CHECK(run_cli("padic --p 4 --n 1").exit_code == 2);
  CHECK(run_cli("padic --p 3 --precision 2 --levels 4 --n 1").exit_code == 3);
  CHECK(run_cli("padic --p 3 --n 1 --lambda 1/3").exit_code == 2);
}
