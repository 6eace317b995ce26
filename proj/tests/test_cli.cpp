#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "setopt/cli.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "setopt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = setopt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& stem) { return std::string(SETOPT_FIXTURE_DIR) + "/" + stem + ".json"; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "setopt_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("solve reports the segment example's argmin") {
  const Run r = run({"solve", fixture_path("segment")});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["argmin"] == json::array({0.0, 1.0}));
  CHECK(r.out.find("\"argmin\": [\n    0.0,\n    1.0\n  ]") != std::string::npos);
}

TEST_CASE("colevel prints grid points") {
  const Run r = run({"colevel", fixture_path("ball_jump"), "--lambda", "-3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse("[[1.0, 0.0]]"));
}

TEST_CASE("random oracle") {
  const Run r = run({"oracle", "random", "--seed", "7", "--count", "1000"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["gerstewitz_samples"] == 1000);
  CHECK(j["max_deviation"].get<double>() <= 1e-9);
  CHECK(j["inclusion_violations"] == 0);
  CHECK(run({"oracle", "random", "--seed", "7", "--count", "1000"}).out == r.out);
}

TEST_CASE("problem oracle") {
  const Run r = run({"oracle", fixture_path("wedge")});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["max_deviation"].get<double>() <= 1e-9);
}

TEST_CASE("scalarize as CSV") {
  const Run r = run({"scalarize", fixture_path("wedge"), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("x1,psi\n-2,1\n", 0) == 0);
  CHECK(r.out.find("\n0,-2\n") != std::string::npos);
}

TEST_CASE("check and asymptotic emit verdict documents") {
  const Run c = run({"check", fixture_path("piecewise_interval"), "--all"});
  REQUIRE(c.code == 0);
  const json j = json::parse(c.out);
  CHECK(j["report"]["coercive_theorem"]["applies"] == true);
  CHECK(j["checks"]["srgi"]["verdict"] == "holds");

  const auto trace = scratch("trace.csv");
  const Run a = run({"asymptotic", fixture_path("asymptotic_1d"), "--direction", "-1", "--direction", "1",
                     "--trace-csv", trace.string()});
  REQUIRE(a.code == 0);
  const json k = json::parse(a.out);
  CHECK(k["estimates"][0]["value"] == -1.0);
  CHECK(k["estimates"][1]["value"] == "+inf");
  CHECK(k["condition_12"]["holds"] == false);
  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  CHECK(header == "direction,t,psi");
}

TEST_CASE("errors and exit codes") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.rfind("error: usage: ", 0) == 0);

  const Run missing = run({"solve", "/nonexistent.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err == "error: validation: unreadable file: /nonexistent.json\n");

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"schema_version": "1"})";
  const Run schema = run({"solve", bad.string()});
  CHECK(schema.code == 1);
  CHECK(schema.err.rfind("error: validation: schema: ", 0) == 0);
  CHECK(std::count(schema.err.begin(), schema.err.end(), '\n') == 1);

  const Run probe = run({"check", fixture_path("ball_jump"), "--sgicc", "--lambda-probe", "-5"});
  CHECK(probe.code == 1);
}

TEST_CASE("fixtures regenerate byte-identically") {
  const auto dir = scratch("fixtures");
  const Run r = run({"fixtures", "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const auto& [stem, doc] : setopt::fixtures::all()) {
    INFO(stem);
    std::ifstream a(dir / (stem + ".json"));
    std::ifstream b(fixture_path(stem));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(setopt::to_document(setopt::build_problem(json::parse(sa.str()))) == doc);
  }
}

TEST_CASE("output is deterministic") {
  CHECK(run({"solve", fixture_path("ball_jump")}).out == run({"solve", fixture_path("ball_jump")}).out);
}
