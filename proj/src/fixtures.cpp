#include "setopt/fixtures.hpp"

#include <cmath>

#include "setopt/problem.hpp"

namespace setopt::fixtures {

namespace {

using nlohmann::json;

json document(json generators, json q, json box, json resolution, json map) {
  return {{"schema_version", kSchemaVersion},
          {"cone", {{"dual_generators", std::move(generators)}, {"q", std::move(q)}}},
          {"domain", {{"box", std::move(box)}, {"resolution", std::move(resolution)}}},
          {"map", std::move(map)},
          {"tolerances", {{"cone_tol", 1e-12}, {"scal_tol", 1e-9}, {"tie_tol", 1e-9}}},
          {"flags", {{"K_q_set", true}}}};
}

json orthant2() { return json::array({json::array({1.0, 0.0}), json::array({0.0, 1.0})}); }
json half_line() { return json::array({json::array({1.0})}); }

json piecewise(json pieces) { return {{"kind", "piecewise"}, {"parameters", {{"pieces", std::move(pieces)}}}}; }

json interval(const char* lower, const char* upper, std::size_t samples = 5) {
  return {{"type", "interval"}, {"lower", lower}, {"upper", upper}, {"samples", samples}};
}

}  // namespace

json hyperbola(std::size_t samples) {
  const double n = static_cast<double>(samples);
  json curve = {{"type", "parametric"},
                {"coords", {"t", "1/t"}},
                {"t", {{"spacing", "log"}, {"lower", 1.0 / n}, {"upper", n}, {"count", samples}}},
                {"note", "log-spaced sample of the curve b = 1/a, a in [1/" + std::to_string(samples) + ", " +
                             std::to_string(samples) + "]; psi has infimum 0 on the full set"}};
  json pieces = json::array({{{"when", "x == 0"}, {"cloud", {{"type", "point"}, {"coords", {"0", "0"}}}}},
                             {{"cloud", curve}}});
  return document(orthant2(), {1.0, 1.0}, {{-1.0, 1.0}}, {21}, piecewise(pieces));
}

json segment() {
  json pieces = json::array(
      {{{"when", "x >= 0 && x <= 1"}, {"cloud", {{"type", "point"}, {"coords", {"x", "1 - x"}}}}},
       {{"cloud", {{"type", "box"}, {"lower", {3.0, 3.0}}, {"upper", {4.0, 4.0}}, {"resolution", {5, 5}}}}}});
  return document(orthant2(), {0.5, 0.5}, {{-1.0, 2.0}}, {301}, piecewise(pieces));
}

json ball_jump() {
  json pieces = json::array(
      {{{"when", "x1 == 1 && x2 == 0"},
        {"cloud", {{"type", "ball"}, {"center", {"-3", "2"}}, {"radius", 1.0}, {"samples", 360}}}},
       {{"cloud", {{"type", "ball"}, {"center", {"abs(x1)", "abs(x2)"}}, {"radius", 1.0}, {"samples", 360}}}}});
  return document(orthant2(), {1.0, 1.0}, {{-3.0, 3.0}, {-3.0, 3.0}}, {13, 13}, piecewise(pieces));
}

json wedge() {
  json a = json::array();
  // Left edge, dense toward the corner (0, 0) which A excludes.
  for (double y : {2.0, 1.5, 1.0}) a.push_back({0.0, y});
  for (int k = 1; k <= 20; ++k) a.push_back({0.0, std::ldexp(1.0, -k)});
  // Bottom edge, likewise dense toward the corner.
  for (int k = 1; k <= 20; ++k) a.push_back({std::ldexp(1.0, -k), 0.0});
  for (double x : {1.0, 2.0, 4.0}) a.push_back({x, 0.0});
  for (double x : {0.5, 1.0, 2.0, 4.0}) a.push_back({x, 2.0});
  for (double y : {0.5, 1.0, 1.5}) a.push_back({4.0, y});
  a.push_back({1.0, 1.0});
  a.push_back({2.0, 1.0});
  json pieces = json::array(
      {{{"when", "x == 0"},
        {"cloud",
         {{"type", "points"},
          {"points", a},
          {"note", "finite sample of A = [0, inf) x [0, 2] without the origin, dense near the corner"}}}},
       {{"cloud", {{"type", "point"}, {"coords", {"1", "0"}}}}}});
  json gens = json::array({json::array({1.0, 1.0}), json::array({1.0, -1.0})});
  return document(gens, {1.0, 0.0}, {{-2.0, 2.0}}, {41}, piecewise(pieces));
}

json interval_rgi() {
  json map = {{"kind", "interval"}, {"parameters", {{"lower", "if(x < 1, abs(x), 2*x)"}, {"upper", "abs(2*x)"}, {"samples", 5}}}};
  return document(half_line(), {1.0}, {{-1.5, 3.0}}, {451}, map);
}

json interval_lsc() {
  json map = {{"kind", "interval"}, {"parameters", {{"lower", "x^2"}, {"upper", "x^2 + 1"}, {"samples", 5}}}};
  return document(half_line(), {1.0}, {{-2.0, 2.0}}, {401}, map);
}

json asymptotic_1d() {
  json pieces = json::array({{{"when", "x >= 0"}, {"cloud", interval("x", "x + 1")}},
                             {{"cloud", interval("-1", "0")}}});
  return document(half_line(), {1.0}, {{-100.0, 100.0}}, {401}, piecewise(pieces));
}

json piecewise_interval() {
  json pieces = json::array({{{"when", "x <= -0.5"}, {"cloud", interval("1", "-x + 0.5")}},
                             {{"when", "x > -0.5 && x < 1.5"}, {"cloud", interval("0.75*x + 0.875", "2")}},
                             {{"when", "x >= 1.5"}, {"cloud", {{"type", "point"}, {"coords", {"x - 1.5"}}}}}});
  return document(half_line(), {1.0}, {{-3.0, 3.0}}, {601}, piecewise(pieces));
}

json constant_map() {
  json map = {{"kind", "constant"}, {"parameters", {{"cloud", {{"type", "points"}, {"points", {{0.0, 0.0}}}}}}}};
  return document(orthant2(), {1.0, 1.0}, {{-1.0, 1.0}, {-1.0, 1.0}}, {11, 11}, map);
}

std::vector<std::pair<std::string, json>> all() {
  return {{"hyperbola", hyperbola()},
          {"segment", segment()},
          {"ball_jump", ball_jump()},
          {"wedge", wedge()},
          {"interval_rgi", interval_rgi()},
          {"interval_lsc", interval_lsc()},
          {"asymptotic_1d", asymptotic_1d()},
          {"piecewise_interval", piecewise_interval()},
          {"constant", constant_map()}};
}

}  // namespace setopt::fixtures
