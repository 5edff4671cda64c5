#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polybern/cli.hpp>
#include <polybern/fault_injection.hpp>
#include <polybern/multi_poly.hpp>
#include <polybern/poly_bernoulli.hpp>
#include <polybern/rational.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace polybern;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  // Enough for this tool's output: quotes only ever wrap whole fields.
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("value command") {
  CHECK(run_cli({"value", "7", "-5"}).out == "17234438\n");
  CHECK(run_cli({"value", "6", "2"}).out == "-38/2205\n");
  CHECK(run_cli({"value", "0", "0"}).out == "1\n");
  CHECK(run_cli({"value", "7", "-5"}).exit_code == 0);

  CHECK(run_cli({"value", "-1", "3"}).exit_code == 2);
  CHECK(run_cli({"value", "x", "y"}).exit_code == 2);
  CHECK(run_cli({"value", "3"}).exit_code == 2);

  auto json_run = run_cli({"value", "6", "2", "--format", "json"});
  auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["n"] == 6);
  CHECK(doc["k"] == 2);
  CHECK(doc["value"] == "-38/2205");
}

TEST_CASE("multi command") {
  CHECK(run_cli({"multi", "0,-1", "5"}).out == "486\n");
  CHECK(run_cli({"multi", "1,1", "4"}).out == "1/20\n");
  CHECK(run_cli({"multi", "0,0", "6"}).out == "64\n");

  auto doc = nlohmann::json::parse(run_cli({"multi", "0,-1", "5", "--format", "json"}).out);
  CHECK(doc["route"] == "alpha");
  CHECK(doc["value"] == "486");
  auto series_doc =
      nlohmann::json::parse(run_cli({"multi", "1,1", "4", "--format", "json"}).out);
  CHECK(series_doc["route"] == "series");
  auto zero_doc =
      nlohmann::json::parse(run_cli({"multi", "0,0", "6", "--format", "json"}).out);
  CHECK(zero_doc["route"] == "all-zero");

  CHECK(run_cli({"multi", "", "5"}).exit_code == 2);
  CHECK(run_cli({"multi", "1,junk", "5"}).exit_code == 2);
  CHECK(run_cli({"multi", "0,-1", "-2"}).exit_code == 2);
}

TEST_CASE("alpha command") {
  CHECK(run_cli({"alpha", "2,1"}).out == "3^n - 7*4^n + 8*5^n\n");
  CHECK(run_cli({"alpha", "3"}).out == "2^n - 6*3^n + 6*4^n\n");
  CHECK(run_cli({"alpha", "0,3,0"}).out == "2*4^n - 18*5^n + 24*6^n\n");
  CHECK(run_cli({"alpha", "0,0"}).exit_code == 2);
  CHECK(run_cli({"alpha", "-2,1"}).exit_code == 2);

  auto doc = nlohmann::json::parse(run_cli({"alpha", "2,1", "--format", "json"}).out);
  CHECK(doc["coefficients"] == nlohmann::json({"1", "-7", "8"}));
  CHECK(doc["weight"] == 3);
}

TEST_CASE("table 2 reproduces its cells and round-trips") {
  auto csv = run_cli({"table", "2", "--format", "csv"});
  auto lines = split_lines(csv.out);
  REQUIRE(lines.size() == 12);  // header + 11 rows
  for (size_t row = 1; row < lines.size(); ++row) {
    auto fields = split_csv_row(lines[row]);
    REQUIRE(fields.size() == 9);
    long k = std::stol(fields[0]);
    for (long n = 0; n <= 7; ++n)
      CHECK(Rational::parse(fields[n + 1]) == pb(n, k));
  }
  // Spot value from the printed table.
  auto row_minus3 = split_csv_row(lines[3]);
  CHECK(row_minus3[0] == "-3");
  CHECK(row_minus3[5] == "1066");
}

TEST_CASE("table 3 reproduces its cells and round-trips") {
  auto csv = run_cli({"table", "3", "--format", "csv"});
  auto lines = split_lines(csv.out);
  REQUIRE(lines.size() == 8);  // header + 7 rows
  const std::vector<std::vector<long>> row_indices = {
      {1, 1}, {1, 0}, {0, 1}, {0, 0}, {0, -1}, {-1, 0}, {-1, -1}};
  for (size_t row = 1; row < lines.size(); ++row) {
    auto fields = split_csv_row(lines[row]);
    REQUIRE(fields.size() == 9);
    IndexVector iv{std::vector<long>(row_indices[row - 1])};
    CHECK(fields[0] == "B^" + iv.str());
    for (long n = 0; n <= 7; ++n)
      CHECK(Rational::parse(fields[n + 1]) == mpb(n, iv));
  }
  auto row_10 = split_csv_row(lines[2]);
  CHECK(row_10[5] == "119/30");
}

TEST_CASE("table 1 lists the 31 expansions") {
  auto plain = run_cli({"table", "1"});
  std::string text = plain.out;
  CHECK(text.find("B_n^(-1,-2) = 3^n - 9*4^n + 12*5^n") != std::string::npos);
  CHECK(text.find("B_n^(-1,-1) = -3^n + 3*4^n") != std::string::npos);
  CHECK(text.find("B_n^(-1,-1,-1) = 4^n - 10*5^n + 15*6^n") != std::string::npos);
  auto csv = run_cli({"table", "1", "--format", "csv"});
  CHECK(split_lines(csv.out).size() == 32);  // header + 31 rows

  CHECK(run_cli({"table", "4"}).exit_code == 2);
  CHECK(run_cli({"table", "0"}).exit_code == 2);
}

TEST_CASE("verify command") {
  auto ok = run_cli({"verify", "thm-2.6-3", "--max-r", "5", "--max-n", "8"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("thm-2.6-3: PASS") != std::string::npos);

  auto all = run_cli({"verify", "all", "--max-n", "3", "--max-k", "3", "--max-r", "2",
                      "--max-m", "2", "--max-i", "2", "--cap", "3"});
  CHECK(all.exit_code == 0);
  CHECK(split_lines(all.out).size() == 30);

  CHECK(run_cli({"verify", "bogus-id"}).exit_code == 2);
  CHECK(run_cli({"verify", "all", "thm-2.5"}).exit_code == 2);
  CHECK(run_cli({"verify", "thm-3.5-1", "--max-k", "1"}).exit_code == 2);

  auto json_doc = nlohmann::json::parse(
      run_cli({"verify", "lemma-2.3", "--max-n", "4", "--max-k", "4", "--format",
               "json"})
          .out);
  REQUIRE(json_doc.is_array());
  REQUIRE(json_doc.size() == 1);
  CHECK(json_doc[0]["identity"] == "lemma-2.3");
  CHECK(json_doc[0]["passed"] == true);
  CHECK(json_doc[0]["cases"] == 20);
  CHECK(json_doc[0]["counterexamples"].is_array());
  CHECK(json_doc[0]["range"]["max_n"] == 4);
}

TEST_CASE("verify exit code reports theorem failures") {
  fault::clear();
  fault::perturb_stirling2(5, 2, 1);
  auto broken = run_cli({"verify", "closed-formula-s1", "--max-n", "4", "--max-k", "4"});
  CHECK(broken.exit_code == 1);
  CHECK(broken.out.find("FAIL") != std::string::npos);
  CHECK(broken.out.find("lhs=") != std::string::npos);
  fault::clear();
  auto fixed = run_cli({"verify", "closed-formula-s1", "--max-n", "4", "--max-k", "4"});
  CHECK(fixed.exit_code == 0);
}

TEST_CASE("conjecture command") {
  auto res = run_cli({"conjecture", "--max-k", "6", "--max-r", "3", "--max-n", "5"});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("-1 62 -540 312 -72 6") != std::string::npos);
  CHECK(res.out.find("PASS") != std::string::npos);

  auto small = run_cli({"conjecture", "--max-k", "4", "--max-r", "2", "--max-n", "3"});
  CHECK(small.out.find("14 10 2") != std::string::npos);  // triangle row with a_{1,1}

  CHECK(run_cli({"conjecture", "--max-k", "2", "--max-r", "2"}).exit_code == 2);
}

TEST_CASE("conjecture findings flip the exit code only under --strict-conjecture") {
  fault::clear();
  fault::perturb_alpha({0, 1}, 1, 1);  // breaks the k=2, r=1 conjecture case
  auto lax = run_cli({"verify", "conj-3.17", "--max-k", "3", "--max-r", "1",
                      "--max-n", "3"});
  CHECK(lax.exit_code == 0);
  CHECK(lax.out.find("FAIL") != std::string::npos);
  auto strict = run_cli({"verify", "conj-3.17", "--max-k", "3", "--max-r", "1",
                         "--max-n", "3", "--strict-conjecture"});
  CHECK(strict.exit_code == 1);

  auto sweep_lax = run_cli({"conjecture", "--max-k", "3", "--max-r", "1", "--max-n", "3"});
  CHECK(sweep_lax.exit_code == 0);
  auto sweep_strict = run_cli({"conjecture", "--max-k", "3", "--max-r", "1", "--max-n",
                               "3", "--strict-conjecture"});
  CHECK(sweep_strict.exit_code == 1);
  fault::clear();
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> invocations = {
      {"table", "2", "--format", "json"},
      {"table", "1", "--format", "markdown"},
      {"verify", "thm-3.6", "--max-r", "3", "--max-n", "4", "--format", "json"},
      {"conjecture", "--max-k", "5", "--max-r", "2", "--format", "csv"},
      {"multi", "0,-1,2", "4", "--format", "json"},
  };
  for (const auto& args : invocations) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("markdown output renders alignment rows") {
  auto md = run_cli({"value", "7", "-5", "--format", "markdown"});
  auto lines = split_lines(md.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1].find("---:") != std::string::npos);
  CHECK(lines[2].find("17234438") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"unknown-command"}).exit_code == 2);
  CHECK(run_cli({"value", "3", "1", "--format", "yaml"}).exit_code == 2);
  CHECK(run_cli({"--help"}).exit_code == 0);
}
