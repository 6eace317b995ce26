#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "support.hpp"

using namespace setopt;
using nlohmann::json;

namespace {

json minimal() {
  return json::parse(R"({
    "schema_version": "1",
    "cone": {"dual_generators": [[1, 0], [0, 1]], "q": [1, 1]},
    "domain": {"points": [[0], [1]]},
    "map": {"kind": "table", "parameters": {"clouds": [[[0, 0]], [[1, -1], [2, 2]]]}}
  })");
}

}  // namespace

TEST_CASE("minimal table document") {
  const Problem p = build_problem(minimal());
  CHECK(p.size() == 2);
  CHECK(p.cloud(1).size() == 2);
  CHECK(p.tolerances().tie_tol == 1e-9);
  CHECK_FALSE(p.flags().k_q_set);
  CHECK(p.evaluate(Vec{1.0}).points[0] == Vec{1.0, -1.0});
  CHECK_THROWS_WITH_AS(p.evaluate(Vec{0.5}), doctest::Contains("x not in grid"), ValidationError);
  const auto ray = p.evaluate_at(Vec{0.8});
  CHECK(ray.cloud->points[0] == Vec{1.0, -1.0});
  CHECK(ray.snap_distance == doctest::Approx(0.2));
}

TEST_CASE("schema violations") {
  auto bad = [](auto edit) {
    json d = minimal();
    edit(d);
    return d;
  };
  CHECK_THROWS_WITH_AS(build_problem(bad([](json& d) { d["schema_version"] = "2"; })), doctest::Contains("schema"),
                       ValidationError);
  CHECK_THROWS_AS(build_problem(bad([](json& d) { d.erase("cone"); })), ValidationError);
  CHECK_THROWS_AS(build_problem(bad([](json& d) { d["domain"]["box"] = json::array({{0, 1}}); })), ValidationError);
  CHECK_THROWS_WITH_AS(build_problem(bad([](json& d) { d["domain"]["points"] = json::array(); })),
                       doctest::Contains("empty grid"), ValidationError);
  CHECK_THROWS_WITH_AS(build_problem(bad([](json& d) { d["domain"]["points"] = {{0}, {0}}; })),
                       doctest::Contains("distinct"), ValidationError);
  CHECK_THROWS_AS(build_problem(bad([](json& d) { d["map"]["parameters"]["clouds"].erase(1); })), ValidationError);
  CHECK_THROWS_WITH_AS(build_problem(bad([](json& d) { d["cone"]["q"] = {1, 0}; })),
                       doctest::Contains("order unit not interior"), ValidationError);
  CHECK_THROWS_WITH_AS(build_problem(bad([](json& d) { d["map"]["parameters"]["clouds"] = {{{0, 0, 0}}, {{1, 1, 1}}}; })),
                       doctest::Contains("dimension mismatch"), ValidationError);
  CHECK_THROWS_AS(build_problem(bad([](json& d) { d["map"]["kind"] = "spline"; })), ValidationError);
  CHECK_THROWS_AS(build_problem(bad([](json& d) { d["tolerances"] = {{"tie_tol", -1}}; })), ValidationError);
  CHECK_THROWS_AS(build_problem(bad([](json& d) { d["flags"] = {{"K_q_set", 1}}; })), ValidationError);
  CHECK_THROWS_WITH_AS(load_problem("/nonexistent/problem.json"), doctest::Contains("unreadable file"),
                       ValidationError);
}

TEST_CASE("interval maps reject reversed bounds") {
  json d = fixtures::interval_lsc();
  d["map"]["parameters"]["lower"] = "x";
  d["map"]["parameters"]["upper"] = "0";
  CHECK_THROWS_WITH_AS(build_problem(d), doctest::Contains("interval violation"), ValidationError);
}

TEST_CASE("uncovered regions are reported") {
  json d = fixtures::asymptotic_1d();
  d["map"]["parameters"]["pieces"][1]["when"] = "x < -1";
  CHECK_THROWS_AS(build_problem(d), ValidationError);
}

TEST_CASE("box grids are lexicographic with exact endpoints") {
  const Problem p = support::fixture("ball_jump");
  CHECK(p.size() == 169);
  CHECK(p.grid().point(0) == Vec{-3.0, -3.0});
  CHECK(p.grid().point(1) == Vec{-3.0, -2.5});
  CHECK(p.grid().point(13) == Vec{-2.5, -3.0});
  CHECK(p.grid().point(168) == Vec{3.0, 3.0});
  CHECK(p.grid().find(Vec{1.0, 0.0}).has_value());
  const Problem ii = support::fixture("segment");
  for (double x : {0.0, 0.25, 0.5, 1.0, 2.0, 0.01, 0.99}) CHECK(ii.grid().find(Vec{x}).has_value());
}

TEST_CASE("ball clouds place quarter turns exactly") {
  const Problem p = support::fixture("ball_jump");
  const auto& c = p.evaluate(Vec{1.0, 0.0});
  CHECK(c.size() == 360);
  CHECK(std::find(c.points.begin(), c.points.end(), Vec{-4.0, 2.0}) != c.points.end());
  CHECK(std::find(c.points.begin(), c.points.end(), Vec{-3.0, 1.0}) != c.points.end());
}

TEST_CASE("every fixture round-trips through the document form") {
  for (const auto& [stem, doc] : fixtures::all()) {
    INFO(stem);
    CHECK(to_document(build_problem(doc)) == doc);
  }
}

TEST_CASE("checked-in fixture files match the generators") {
  for (const auto& [stem, doc] : fixtures::all()) {
    INFO(stem);
    std::ifstream in(std::string(SETOPT_FIXTURE_DIR) + "/" + stem + ".json");
    REQUIRE(in.good());
    CHECK(json::parse(in) == doc);
  }
}

TEST_CASE("restriction to a ball keeps the map and drops the box") {
  const Problem p = support::fixture("piecewise_interval");
  const Problem k1 = p.restricted_to_ball(1.0);
  CHECK(k1.size() == 201);
  CHECK_FALSE(k1.grid().box().has_value());
  CHECK(k1.evaluate(Vec{-0.5}).points == p.evaluate(Vec{-0.5}).points);
}

TEST_CASE("table maps survive the document form") {
  const Problem p = build_problem(minimal());
  CHECK(to_document(p)["map"]["kind"] == "table");
  CHECK(to_document(build_problem(to_document(p))) == to_document(p));
}
