#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PRK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(PRK_TEST_DATA_DIR) + "/" + name; }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(f);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("ranks") {
  auto r = run("ranks --flavor sp --r 3 --max-degree 16");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["nonzero_degrees"] == Json::array({3, 7, 11, 15}));
  r = run("ranks --flavor so --k 1 --r 1 --max-degree 6");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["nonzero_degrees"] == Json::array({1, 3}));
  CHECK(run("ranks --flavor o --k 2 --r 1").code == 2);
  CHECK(run("ranks --flavor spin --k 2 --r 1").code == 2);
}

TEST_CASE("table, csv and json carry the same numbers") {
  const Json j = Json::parse(run("ranks --flavor so --k 4 --r 2 --max-degree 40").out);
  const auto csv = csv_rows(run("ranks --flavor so --k 4 --r 2 --max-degree 40 --format csv").out);
  const auto table = run("ranks --flavor so --k 4 --r 2 --max-degree 40 --format table").out;
  REQUIRE(csv.size() == 41);
  for (int d = 1; d <= 40; ++d) {
    CHECK(csv[d][0] == std::to_string(d));
    CHECK(csv[d][1] == j["ranks"][d - 1]["rank"].dump());
    const std::regex line("\\n" + std::to_string(d) + " +" + j["ranks"][d - 1]["rank"].dump() + "\\n");
    CHECK(std::regex_search(table, line));
  }

  const Json cj = Json::parse(run("corollary-compare --k 1 --r 2 --max-degree 10").out);
  const auto ccsv = csv_rows(run("corollary-compare --k 1 --r 2 --max-degree 10 --format csv").out);
  for (int d = 1; d <= 10; ++d) {
    CHECK(ccsv[d][1] == cj["rows"][d - 1]["derived"].dump());
    CHECK(ccsv[d][2] == cj["rows"][d - 1]["printed"].dump());
  }
}

TEST_CASE("cobordism rank") {
  auto r = run("cobordism-rank --flavor sp --r 2 --betti " + data("s7.json"));
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["rank"] == 1);
  r = run("cobordism-rank --flavor so --k 1 --r 1 --betti " + data("t2.json") + " --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("rank = 2") != std::string::npos);
  CHECK(Json::parse(run("cobordism-rank --k 2 --r 1 --betti " + data("zero.json")).out)["rank"] == 0);
  CHECK(run("cobordism-rank --betti " + data("malformed.json")).code == 3);
  CHECK(run("cobordism-rank --betti " + data("missing.json")).code == 3);
}

TEST_CASE("spectral sequence commands") {
  auto r = run("e1-page --p-max 3 --q-max 10 --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("Z_240") != std::string::npos);
  r = run("e1-page --p-max 2 --q-max 12 --format table");
  CHECK(r.code == 5);
  CHECK(r.out.find("?") != std::string::npos);  // page still printed

  r = run("segal-audit --p 2");
  CHECK(r.code == 0);
  const Json s = Json::parse(r.out);
  CHECK(s["assignments"] == Json::array({Json::array({24})}));
  CHECK(s["verdict"] == "surjective");
  CHECK(run("segal-audit --p 4").code == 5);

  CHECK(run("odd-torsion-audit --i-max 11").code == 0);
  CHECK(run("odd-torsion-audit --i-max 12").code == 5);
  CHECK(run("odd-torsion-audit --i-max 12 --stems " + data("stems_8_11.json")).code == 0);
  CHECK(run("odd-torsion-audit --stems " + data("stems_no_source.json")).code == 3);
}

TEST_CASE("umbrella and comparator") {
  auto r = run("umbrella-verify --height 3");
  CHECK(r.code == 0);
  const Json u = Json::parse(r.out);
  CHECK(u["singular_points"] == Json::array({Json::array({"0", "0", "0", "0"})}));
  CHECK(u["grid"]["height"] == 3);

  r = run("corollary-compare --k 2 --r 3 --max-degree 60 --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 disagreements") != std::string::npos);
  r = run("corollary-compare --k 1 --r 2 --max-degree 10 --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("first disagreement at j=5") != std::string::npos);
}

TEST_CASE("json output is deterministic") {
  CHECK(run("odd-torsion-audit").out == run("odd-torsion-audit").out);
  CHECK(run("umbrella-verify --height 2").out == run("umbrella-verify --height 2").out);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("ranks --r -1").code == 1);
  CHECK(run("ranks --format xml").code == 1);
}
