#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "setopt/scalarizer.hpp"
#include "support.hpp"

using namespace setopt;

namespace {

/// Colev(F, lambda q) straight from the definition with the primal cone.
GridSet brute_colevel(const Problem& p, const support::TestCone& tc, double lambda) {
  Vec lq(tc.q.size());
  for (std::size_t i = 0; i < lq.size(); ++i) lq[i] = lambda * tc.q[i];
  GridSet out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!support::brute_lower_less({lq}, p.cloud(i).points, tc, true)) out.push_back(i);
  }
  return out;
}

GridSet indices(const Problem& p, std::vector<Vec> xs) {
  GridSet out;
  for (const auto& x : xs) out.push_back(p.index_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("scalarization of the segment example") {
  const Problem p = support::fixture("segment");
  const double expect[][2] = {{0.0, 0.0}, {0.25, 0.5}, {0.5, 1.0}, {1.0, 0.0}, {2.0, 6.0}, {-1.0, 6.0}};
  for (const auto& [x, v] : expect) CHECK(std::abs(psi_f(p, Vec{x}) - v) <= 1e-12);
  CHECK(m_f_q(p) == 0.0);
}

TEST_CASE("scalarization of the ball example") {
  const Problem p = support::fixture("ball_jump");
  CHECK(m_f_q(p) == -4.0);
  CHECK(psi_f(p, Vec{0.0, 0.0}) == -1.0);
  CHECK(psi_f(p, Vec{2.0, -3.0}) == 1.0);
  CHECK(colevel(p, -3.0) == indices(p, {{1.0, 0.0}}));
}

TEST_CASE("scalarization of the wedge example") {
  const Problem p = support::fixture("wedge");
  CHECK(std::abs(psi_f(p, Vec{0.0}) + 2.0) <= 1e-12);
  for (double x : {-2.0, -0.1, 0.1, 1.0, 2.0}) CHECK(psi_f(p, Vec{x}) == 1.0);
  CHECK(colevel(p, 0.5) == indices(p, {{0.0}}));
}

TEST_CASE("scalarization of the piecewise interval example") {
  const Problem p = support::fixture("piecewise_interval");
  const double expect[][2] = {{-1.0, 1.0}, {-0.5, 1.0}, {0.0, 0.875}, {1.5, 0.0}, {2.0, 0.5}, {-0.4, 0.575}};
  for (const auto& [x, v] : expect) CHECK(std::abs(psi_f(p, Vec{x}) - v) <= 1e-12);
}

TEST_CASE("the interval example's colevel is the grid below 1") {
  const Problem p = support::fixture("interval_rgi");
  GridSet expect;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.grid().point(i)[0] < 1.0) expect.push_back(i);
  }
  CHECK(colevel(p, 1.5) == expect);
}

TEST_CASE("on a wider grid the same colevel is [-1.5, 1)") {
  auto doc = fixtures::interval_rgi();
  doc["domain"]["box"] = {{-3.0, 3.0}};
  doc["domain"]["resolution"] = {601};
  const Problem p = build_problem(doc);
  GridSet expect;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p.grid().point(i)[0];
    if (x >= -1.5 && x < 1.0) expect.push_back(i);
  }
  CHECK(colevel(p, 1.5) == expect);
}

TEST_CASE("both colevel routes agree with the definition on every fixture") {
  const std::vector<std::pair<std::string, support::TestCone>> cases = {
      {"segment", {support::ConeKind::Orthant2, {0.5, 0.5}}},
      {"ball_jump", {support::ConeKind::Orthant2, {1.0, 1.0}}},
      {"wedge", {support::ConeKind::Wedge, {1.0, 0.0}}},
      {"piecewise_interval", {support::ConeKind::Orthant2, {1.0}}},
      {"asymptotic_1d", {support::ConeKind::Orthant2, {1.0}}},
      {"constant", {support::ConeKind::Orthant2, {1.0, 1.0}}}};
  for (const auto& [name, tc] : cases) {
    INFO(name);
    const Problem p = support::fixture(name);
    const ScalarField f = scalarize(p);
    for (double lambda : {f.m_f_q + 0.3, f.m_f_q + 1.1, f.m_f_q + 2.5, 0.7}) {
      // Keep lambda off the sampled Psi values so the tie tolerance does not matter.
      if (std::any_of(f.values.begin(), f.values.end(), [&](double v) { return std::abs(v - lambda) < 1e-6; })) {
        continue;
      }
      CHECK(colevel(p, f, lambda) == brute_colevel(p, tc, lambda));
    }
  }
}

TEST_CASE("colevel at a set") {
  const Problem p = support::fixture("segment");
  GridSet expect;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p.grid().point(i)[0];
    if (x >= 0.0 && x <= 1.0) expect.push_back(i);
  }
  CHECK(colevel_at_set(p, p.evaluate(Vec{0.0})) == expect);
}

TEST_CASE("sampling the hyperbola drives Psi toward zero") {
  double previous = INFINITY;
  for (std::size_t n : {10, 100, 1000, 10000}) {
    const Problem p = build_problem(fixtures::hyperbola(n));
    const double v = psi_f(p, Vec{0.5});
    CHECK(v < previous);
    CHECK(v == doctest::Approx(1.0 / static_cast<double>(n)));
    CHECK(psi_f(p, Vec{0.0}) == 0.0);
    previous = v;
  }
  CHECK(previous <= 0.05);
}
