#ifndef SETOPT_FIXTURES_HPP
#define SETOPT_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace setopt::fixtures {

/// F(0) = {(0,0)}, F(x) = samples of {(a, b) : a > 0, 1/a <= b} on the curve
/// b = 1/a at `samples` log-spaced a in [1/samples, samples].
nlohmann::json hyperbola(std::size_t samples = 1000);
/// F(x) = {(x, 1 - x)} on [0, 1], the box [3,4]^2 elsewhere; q = (1/2, 1/2).
nlohmann::json segment();
/// Unit balls around (|x1|, |x2|), except F(1,0) = (-3,2) + B.
nlohmann::json ball_jump();
/// Cone {-y1 <= y2 <= y1}, q = (1,0); F(0) samples A = [0,inf) x [0,2] minus the origin.
nlohmann::json wedge();
/// Interval map with lower bound |x| (x < 1), 2x (x >= 1).
nlohmann::json interval_rgi();
/// Interval map [x^2, x^2 + 1].
nlohmann::json interval_lsc();
/// [x, x + 1] for x >= 0, [-1, 0] for x < 0.
nlohmann::json asymptotic_1d();
/// Piecewise interval map that is srgi on R but not on [-1, 1].
nlohmann::json piecewise_interval();
/// F(x) = {(0, 0)} on [-1,1]^2.
nlohmann::json constant_map();

/// (file stem, document) for every fixture.
std::vector<std::pair<std::string, nlohmann::json>> all();

}  // namespace setopt::fixtures

#endif
