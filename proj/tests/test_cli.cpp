#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ptcms/cli.hpp"

using namespace ptcms::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(26.0) == "26");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv rendering") {
  Json rows = Json::array();
  rows.push_back({{"a", 1}, {"b", "x"}});
  rows.push_back({{"a", 2.5}, {"b", "y"}});
  CHECK(rows_to_csv(rows) == "a,b\n1,x\n2.5,y\n");
}

TEST_CASE("deform command") {
  const auto r = invoke({"deform", "--group", "a2", "--scheme", "typeA", "--epsilon", "0.3"});
  CHECK(r.code == kPass);
  const auto j = Json::parse(r.out);
  CHECK(j["meta"]["tool"] == "ptcms");
  CHECK(j["meta"]["command"] == "deform");
  CHECK(j["data"].size() == 6);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("spectrum command") {
  const auto r = invoke({"spectrum", "--group", "g2", "--gs", "2", "--gl", "2", "--profile", "phi-shift", "--nmax",
                         "0", "--lmax", "0"});
  CHECK(r.code == kPass);
  const auto levels = Json::parse(r.out)["data"]["levels"];
  REQUIRE(levels.size() == 4);
  CHECK(levels[0]["branch"] == "++");
  CHECK(levels[0]["energy"] == 26.0);
  CHECK(levels[3]["branch"] == "--");
  CHECK(levels[3]["energy"] == -10.0);
}

TEST_CASE("figure csv") {
  const auto r = invoke({"figure", "--group", "g2", "--epsilon", "0.5", "--format", "csv"});
  CHECK(r.code == kPass);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 13);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"roots", "--group", "b2"}).code == kUsageError);
  CHECK(invoke({"spectrum", "--gs", "-1", "--profile", "undeformed"}).code == kUsageError);
  CHECK(invoke({"deform", "--scheme", "typeC"}).code == kUsageError);
  CHECK(invoke({"--version"}).out == "0.3.1\n");
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"potential", "--group", "g2", "--gs", "1.3", "--gl", "0.7", "--epsilon", "0.4",
                                      "--point", "0.3,-1.2,0.77", "--polar", "1.1,0.52"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("verify exit code follows the checks") {
  const auto r = invoke({"verify"});
  const auto checks = Json::parse(r.out)["checks"];
  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  CHECK(checks.size() >= 10);
  CHECK((r.code == kPass) == all);
  if (!all) CHECK(r.err.find("check failed:") != std::string::npos);
}
