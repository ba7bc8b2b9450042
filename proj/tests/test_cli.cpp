#include "support.hpp"

#include <waring/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace waring;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "waring");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("waring_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("argument parsing helpers", "[cli]") {
  CHECK(cli::parse_exponents("3,3,3") == ExponentSeq{3, 3, 3});
  CHECK(cli::parse_exponents(" 4, 2 ") == ExponentSeq{4, 2});
  CHECK_THROWS_AS(cli::parse_exponents("3"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_exponents("3,,3"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_exponents("3,0"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_exponents("3,-1"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_exponents("3,x"), cli::UsageError);

  CHECK(cli::parse_param("2", true) == 2);
  CHECK(cli::parse_param("-3/4", true) == make_rational(-3, 4));
  CHECK(cli::parse_param("1", false) == 1);
  CHECK_THROWS_AS(cli::parse_param("1", true), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_param("-1", true), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_param("0", false), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_param("2/0", false), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_param("two", false), cli::UsageError);
}

TEST_CASE("points command", "[cli]") {
  auto r = run({"points", "-a", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[\"1\",\"1\"],[\"-1\",\"1\"]]\n");

  r = run({"points", "-a", "3,3,3", "-t", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x0,x1,x2\n1,1,1\n1,-1,1\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 29);

  r = run({"points", "-a", "2,2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

  CHECK(run({"points", "-a", "3,3", "-t", "1"}).code == cli::usage_error);
  CHECK(run({"points", "-a", "3"}).code == cli::usage_error);
  CHECK(run({"points"}).code == cli::usage_error);
  CHECK(run({"points", "-a", "3,3", "--format", "xml"}).code == cli::usage_error);
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"frobnicate"}).code == cli::usage_error);
}

TEST_CASE("decompose and verify round trip", "[cli]") {
  const auto file = temp_file("dec333.json");
  auto r = run({"decompose", "-a", "3,3,3", "-t", "2", "--out", file.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("trying t = 2") != std::string::npos);
  const auto js = Json::parse(slurp(file));
  CHECK(js["term_count"] == 28);
  CHECK(js["verified"] == true);
  CHECK(js["lambdas"][0] == "1/2880");
  CHECK(js["t"] == "2");

  r = run({"verify", file.string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["verified"] == true);

  // A tampered weight no longer verifies.
  auto bad = js;
  bad["lambdas"][3] = "1/2881";
  const auto bad_file = temp_file("dec333_bad.json");
  std::ofstream(bad_file) << bad.dump();
  r = run({"verify", bad_file.string()});
  CHECK(r.code == cli::math_failure);
  CHECK(Json::parse(r.out)["verified"] == false);

  std::ofstream(bad_file) << "{not json";
  CHECK(run({"verify", bad_file.string()}).code == cli::usage_error);
  CHECK(run({"verify", temp_file("does_not_exist.json").string()}).code == cli::usage_error);

  // Standard input.
  std::istringstream in(slurp(file));
  auto* old = std::cin.rdbuf(in.rdbuf());
  r = run({"verify", "-"});
  std::cin.rdbuf(old);
  CHECK(r.code == 0);

  fs::remove(file);
  fs::remove(bad_file);
}

TEST_CASE("decompose round trips for several sequences", "[cli][property]") {
  for (const auto* a : {"1,1", "2,2", "4,2,1", "3,2,2", "5,3"}) {
    const auto file = temp_file("round.json");
    REQUIRE(run({"decompose", "-a", a, "--out", file.string()}).code == 0);
    CHECK(run({"verify", file.string()}).code == 0);
    fs::remove(file);
  }
  const auto pruned = run({"decompose", "-a", "4,4", "--prune"});
  REQUIRE(pruned.code == 0);
  const auto js = Json::parse(pruned.out);
  CHECK(js["term_count"] == js["nonzero_terms"]);

  const auto text = run({"decompose", "-a", "1,1", "--format", "text"});
  CHECK(text.out == "(1/4) * ((1)*X0 + (1)*X1)^2\n(-1/4) * ((-1)*X0 + (1)*X1)^2\n");
}

TEST_CASE("output is deterministic", "[cli]") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"decompose", "-a", "4,3,2", "-t", "3/2"},
        std::vector<std::string>{"points", "-a", "5,4,3"}, std::vector<std::string>{"table"},
        std::vector<std::string>{"validate", "-a", "3,3", "-t", "2"},
        std::vector<std::string>{"check-initial", "-a", "4,3,3", "-t", "3"}}) {
    const auto first = run(args), second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("bounds and table commands", "[cli]") {
  auto r = run({"table"});
  CHECK(r.code == 0);
  CHECK(r.out == bounds_csv(bounds_table(reference_table_sequences())));

  r = run({"table", "-a", "3,3,3", "-a", "4,3,3", "-a", "4,4,3", "-a", "4,4,4", "-a", "5,5,5,5", "-a",
           "7,7,7,7,7", "-a", "10,9,8,7,6,5,4", "-a", "7,7,7,7,7,7,7"});
  CHECK(r.out == bounds_csv(bounds_table(reference_table_sequences())));

  r = run({"bounds", "-a", "5,5,5,5"});
  CHECK(r.out == "exponents,UB_BT,UB_CKOV,UB_HM\n\"5,5,5,5\",886,1000,520\n");
  r = run({"bounds", "-a", "3,3,3", "--format", "json"});
  CHECK(Json::parse(r.out)[0]["UB_CKOV"] == 36);
  r = run({"bounds", "-a", "3,3,3", "--format", "text"});
  CHECK(r.out == "(3,3,3)  UB_BT=38  UB_CKOV=36  UB_HM=28\n");
}

TEST_CASE("check-initial and validate exit codes", "[cli]") {
  auto r = run({"check-initial", "-a", "4,4,3", "-t", "2"});
  CHECK(r.code == 0);
  auto js = Json::parse(r.out);
  CHECK(js["ideals_match"] == true);

  CHECK(run({"check-initial", "-a", "4,4,3", "--budget", "1"}).code == cli::budget_exhausted);

  r = run({"validate", "-a", "3,3,3", "-t", "2"});
  CHECK(r.code == 0);
  js = Json::parse(r.out);
  CHECK(js["pass"] == true);
  CHECK_FALSE(js.contains("timing_ms"));
  CHECK(Json::parse(run({"validate", "-a", "3,3", "--timing"}).out).contains("timing_ms"));

  r = run({"validate", "-a", "3,3,3", "-t", "1"});
  CHECK(r.code == cli::math_failure);
  CHECK(Json::parse(r.out)["first_failure"] == 1);
  CHECK(r.err.find("step 1") != std::string::npos);

  CHECK(run({"validate", "-a", "4,4,3", "--budget", "1"}).code == cli::budget_exhausted);
  CHECK(run({"validate", "-a", "4,4,3", "--skip-groebner"}).code == 0);
  CHECK(run({"validate", "-a", "3,3", "-t", "0"}).code == cli::usage_error);
}
