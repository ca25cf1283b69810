#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = skewdyck::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series at half length") {
  const auto r = invoke({"series", "--order", "9", "--half-length"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2 6 20 71 262 994 3852\n");
}

TEST_CASE("series at full length spreads onto even powers") {
  const auto r = invoke({"series", "--order", "9"});
  CHECK(r.out == "1 0 1 0 2 0 6 0 20\n");
}

TEST_CASE("bivariate rows") {
  const auto r = invoke({"bivariate", "--order", "7"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 7);
  CHECK(rows[5] == "71 64 2");
  CHECK(rows[6] == "262 261 20");
}

TEST_CASE("count") {
  CHECK(invoke({"count", "4", "0", "--t-eval", "one"}).out == "3\n");
  CHECK(invoke({"count", "4", "0"}).out == "2+t\n");
  CHECK(invoke({"count", "4", "0", "--t-eval", "zero"}).out == "2\n");
  CHECK(invoke({"count", "10", "0", "--t-eval", "1/2"}).out == "207/2\n");
}

TEST_CASE("verify exits 0") {
  const auto r = invoke({"verify", "--order", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("21/21 checks passed") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"count", "4"}).code == 2);
  CHECK(invoke({"series", "--order", "0"}).code == 2);
  CHECK(invoke({"series", "--format", "xml"}).code == 2);
  CHECK(invoke({"series", "--t-eval", "maybe"}).code == 2);
  CHECK(invoke({"levels", "1", "--half-length"}).code == 2);
  CHECK(invoke({"render", "UDX"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"series", "--order", "30", "--format", "json"},
           {"bivariate", "--order", "12", "--format", "tsv"},
           {"asympt", "--n", "50,100"},
           {"levels", "3", "--order", "20"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("series with t = 0 equals level 0") {
  CHECK(invoke({"series", "--t-eval", "zero", "--half-length", "--order", "20"}).out ==
        invoke({"levels", "0", "--half-length", "--order", "20"}).out);
  CHECK(invoke({"series", "--t-eval", "track", "--order", "14"}).out ==
        invoke({"levels", "0", "--t-eval", "track", "--order", "14"}).out);
}

TEST_CASE("JSON schema") {
  const auto j = nlohmann::json::parse(invoke({"series", "--order", "5", "--half-length", "--format", "json"}).out);
  CHECK(j["variable"] == "z(half)");
  CHECK(j["t_mode"] == "zero");
  CHECK(j["sequence"] == nlohmann::json::array({"1", "1", "2", "6", "20"}));

  const auto b = nlohmann::json::parse(invoke({"bivariate", "--order", "6", "--format", "json"}).out);
  CHECK(b["t_mode"] == "track");
  CHECK(b["sequence"][5] == nlohmann::json::array({"71", "64", "2"}));

  const auto v = nlohmann::json::parse(invoke({"verify", "--order", "8", "--no-golden", "--format", "json"}).out);
  CHECK(v["passed"] == v["total"]);
  CHECK(v["checks"].size() == 15);

  const auto a = nlohmann::json::parse(invoke({"asympt", "--n", "100", "--format", "json"}).out);
  CHECK(a["rows"].size() == 1);
}

TEST_CASE("asympt table") {
  const auto r = invoke({"asympt", "--n", "50,1600"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n\ts_n\testimate\tratio\n", 0) == 0);
  CHECK(invoke({"asympt", "--n", "0"}).code == 2);
}

TEST_CASE("render") {
  const auto r = invoke({"render", "UUDR", "--unit", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
  CHECK(invoke({"render", "UUDR", "--red-color", "#ff0000"}).out.find("#ff0000") != std::string::npos);
}
