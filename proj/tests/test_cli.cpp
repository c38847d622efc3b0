#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kostant/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kostant::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("qmult all routes agree") {
  const auto r = run({"qmult", "--rank", "5", "--mu", "2..3", "--method", "all", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["query"]["rank"] == 5);
  for (const auto& route : {"kwmf_full", "closed_form"})
    CHECK(j["result"][route]["q_multiplicity"]["pretty"] == "q^3");
  CHECK(j["result"]["predicted"].dump().find("q^3") != std::string::npos);
}

TEST_CASE("alt-set both") {
  const auto r = run({"alt-set", "--rank", "7", "--mu", "3..4", "--method", "both", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["result"]["brute_force"]["count"] == 6);
  CHECK(j["result"]["characterized"]["count"] == 6);
  CHECK(j["result"]["sets_equal"] == true);
}

TEST_CASE("partition with oracle") {
  const auto r = run({"partition", "--rank", "3", "--weight", "1,2,1", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2q^2 + 2q^3 + q^4") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("identity csv") {
  const auto r = run({"identity", "--max-n", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,binomial_sum,fibonacci_n_plus_2,holds\n0,1,1,1\n1,2,2,1\n2,3,3,1\n3,5,5,1\n");
}

TEST_CASE("zero weight through kwmf") {
  const auto r = run({"qmult", "--rank", "2", "--mu", "0", "--method", "kwmf", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["q_multiplicity"]["coeffs"] == json::array({0, 1, 1}));
  CHECK(run({"qmult", "--rank", "2", "--mu", "0"}).code == 2);
}

TEST_CASE("usage errors exit 2 with a one-line diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"qmult", "--rank", "3", "--mu", "3..1"},
           {"qmult", "--rank", "3", "--mu", "banana"},
           {"alt-set", "--rank", "3", "--mu", "1..2", "--bogus"},
           {"partition", "--rank", "3", "--weight", "1,2"},
           {"frobnicate"},
       }) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("capacity errors exit 3") {
  const auto r = run({"qmult", "--rank", "9", "--mu", "2..3", "--method", "kwmf"});
  CHECK(r.code == 3);
  CHECK(r.err.find("--brute-cap") != std::string::npos);
  CHECK(run({"qmult", "--rank", "5", "--mu", "2..3", "--method", "kwmf", "--brute-cap", "4"}).code == 3);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "kostant_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = run({"qmult", "--rank", "4", "--mu", "2..3", "--format", "json", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  const auto j = json::parse(in);
  CHECK(j["result"]["q_multiplicity"]["pretty"] == "q^2");
  std::filesystem::remove(path);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  const std::vector<std::string> args{"verify", "--max-brute-rank", "4", "--max-closed-rank", "10",
                                      "--seed", "42", "--format", "csv"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  // Drop the timing column (the fourth) before comparing.
  const auto without_seconds = [](const std::string& csv) {
    std::string kept;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
      std::vector<std::string> fields(1);
      bool quoted = false;
      for (char c : line) {
        if (c == '"') quoted = !quoted;
        if (c == ',' && !quoted) fields.emplace_back();
        else fields.back() += c;
      }
      REQUIRE(fields.size() == 5);
      fields[3].clear();
      for (const auto& f : fields) kept += f + "|";
      kept += "\n";
    }
    return kept;
  };
  const auto sa = without_seconds(a.out);
  const auto sb = without_seconds(b.out);
  CHECK(sa == sb);
  CHECK(std::count(sa.begin(), sa.end(), '\n') == 12);
}
