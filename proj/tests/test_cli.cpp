#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "twistlat/cli.hpp"
#include "twistlat/report.hpp"

using namespace twistlat;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "twistlat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("invariants") {
  const Outcome text = invoke({"invariants"});
  CHECK(text.code == 0);
  CHECK(text.out.find("(1,0,3,38,3,0,1)") != std::string::npos);
  CHECK(text.out.find("31/16*pt") != std::string::npos);

  const Outcome json = invoke({"invariants", "--d", "3", "--format", "json"});
  REQUIRE(json.code == 0);
  const Json j = Json::parse(json.out);
  CHECK(j["hodge"]["flattened"] == Json::parse("[1,0,1,20,1,0,1]"));

  CHECK(invoke({"invariants", "--d", "0"}).code == 2);
}

TEST_CASE("gram") {
  const Outcome json = invoke({"gram", "--m", "1", "--n", "3", "--format", "json"});
  REQUIRE(json.code == 0);
  CHECK(Json::parse(json.out)["entries"] == Json::parse("[[13,-3,2],[1,-2,0],[2,0,0]]"));
  CHECK(invoke({"gram", "--m", "1", "--n", "3"}).out.find("[13, -3, 2]") != std::string::npos);
}

TEST_CASE("grr") {
  const Outcome json = invoke({"grr", "--format", "json"});
  REQUIRE(json.code == 0);
  const Json j = Json::parse(json.out);
  CHECK(j["a_solved"] == -15);
  CHECK(j["b_squared_fraction"] == "3/4");
  CHECK(invoke({"grr"}).out.find("3/4") != std::string::npos);
}

TEST_CASE("decide") {
  const Outcome twisted = invoke({"decide", "--m", "1", "--n", "3", "--format", "json"});
  REQUIRE(twisted.code == 0);
  const Json j = Json::parse(twisted.out);
  CHECK(j["verdict"] == "obstructed");
  CHECK(j["certificate"] == Json::parse(R"({"modulus": 4, "divisor": 2})"));

  const auto path = std::filesystem::temp_directory_path() / "twistlat_zero.json";
  std::ofstream(path) << R"({"basis": ["1", "h", "pt"], "entries": [[0,0,0],[0,0,0],[0,0,0]]})";
  const Outcome zero = invoke({"decide", "--gram-file", path.string(), "--format", "json"});
  REQUIRE(zero.code == 0);
  CHECK(Json::parse(zero.out)["certificate"] == Json::parse(R"({"modulus": 2, "divisor": 2})"));

  // An undecided verdict is not a failure.
  std::ofstream(path) << R"({"basis": ["1", "h", "pt"], "entries": [[1,0,0],[0,1,0],[0,0,1]]})";
  const Outcome open = invoke({"decide", "--gram-file", path.string(), "--bound", "3", "--modulus", "3"});
  CHECK(open.code == 0);
  CHECK(open.out.find("unknown") != std::string::npos);

  std::ofstream(path) << R"({"basis": ["1", "h", "pt"], "entries": [[1,0,0],[0,1,0]]})";
  const Outcome bad = invoke({"decide", "--gram-file", path.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("entries") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(invoke({"decide", "--gram-file", "/nonexistent/twistlat.json"}).code == 2);
  CHECK(invoke({"decide", "--bound", "0"}).code == 2);
  CHECK(invoke({"decide", "--m", "1", "--gram-file", "x.json"}).code == 2);
}

TEST_CASE("net") {
  const Outcome text = invoke({"net"});
  CHECK(text.code == 0);
  CHECK(text.out.find("13 = 8 + 5") != std::string::npos);
  CHECK(text.out.find("with h0 = 2: (0,0,-1,-1)\n") != std::string::npos);
  CHECK(Json::parse(invoke({"net", "--format", "json"}).out).is_object());
  CHECK(invoke({"net", "--modifications", "-1"}).code == 2);
}

TEST_CASE("malformed input exits 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"gram", "--m", "notanumber"}).code == 2);
  CHECK(invoke({"gram", "--format", "xml"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"--version"}).out.find(kToolkitVersion) != std::string::npos);
}

TEST_CASE("paper") {
  const Outcome text = invoke({"paper"});
  CHECK(text.code == 0);
  CHECK(text.out.find("PASS") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);

  const Outcome first = invoke({"paper", "--format", "json"});
  const Outcome second = invoke({"paper", "--format", "json", "--workers", "4"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const Json j = Json::parse(first.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["verdict"]["verdict"] == "obstructed");
  CHECK(j["hodge"]["flattened"] == Json::parse("[1,0,3,38,3,0,1]"));
  CHECK(j["grr"]["b_squared_fraction"] == "3/4");
  CHECK_FALSE(j.contains("wall_clock_ms"));
  CHECK(emit_report(report_from_json(j), OutputFormat::json) == first.out);

  const Outcome timed = invoke({"paper", "--format", "json", "--timing"});
  CHECK(Json::parse(timed.out).contains("wall_clock_ms"));

  // A search budget too small to reach the certificate is reported as a mismatch.
  CHECK(invoke({"paper", "--modulus", "3"}).code == 1);
}
