#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "setopt/oracle.hpp"
#include "setopt/parallel.hpp"
#include "setopt/solver.hpp"
#include "support.hpp"

using namespace setopt;

namespace {

GridSet grid_between(const Problem& p, double lo, double hi) {
  GridSet out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p.grid().point(i)[0];
    if (x >= lo && x <= hi) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("segment example: argmin is a proper subset of the efficient set") {
  const Problem p = support::fixture("segment");
  const SolveReport r = solve(p);
  CHECK(r.argmin_set == GridSet{p.index_of(Vec{0.0}), p.index_of(Vec{1.0})});
  CHECK(r.sweff_set == grid_between(p, 0.0, 1.0));
  CHECK(r.inclusion_argmin_in_sweff);
  CHECK(r.inclusion_sweff_in_weff);
  CHECK(r.argmin_strictly_smaller);
}

TEST_CASE("sampled hyperbola example: only the origin is efficient") {
  const Problem p = support::fixture("hyperbola");
  const SolveReport r = solve(p);
  CHECK(r.sweff_set == GridSet{p.index_of(Vec{0.0})});
  CHECK(r.argmin_set == GridSet{p.index_of(Vec{0.0})});
}

TEST_CASE("wedge example: the origin alone is efficient") {
  const Problem p = support::fixture("wedge");
  CHECK(sweff_brute(p) == GridSet{p.index_of(Vec{0.0})});
}

TEST_CASE("constant map: everything is efficient") {
  const Problem p = support::fixture("constant");
  CHECK(sweff_brute(p).size() == p.size());
  CHECK(argmin_scalarized(p).size() == p.size());
}

TEST_CASE("argmin inside SWEff inside WEff on 200 random problems") {
  std::mt19937_64 rng(424242);
  int violations = 0;
  for (int k = 0; k < 200; ++k) {
    const Problem p = random_problem(rng);
    const GridSet argmin = argmin_scalarized(p);
    const GridSet sweff = sweff_brute(p);
    const GridSet weff = weff_brute(p);
    if (!std::includes(sweff.begin(), sweff.end(), argmin.begin(), argmin.end())) ++violations;
    CHECK(std::includes(weff.begin(), weff.end(), sweff.begin(), sweff.end()));
    CHECK_FALSE(argmin.empty());
  }
  CHECK(violations == 0);
}

TEST_CASE("brute efficient set matches the primal definition") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    const Problem p = random_problem(rng);
    CHECK(sweff_brute(p) == support::brute_sweff(p, support::primal_of(p)));
  }
}

TEST_CASE("worker count does not change results") {
  const Problem p = support::fixture("ball_jump");
  ::setenv("SETOPT_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  const SolveReport one = solve(p);
  ::setenv("SETOPT_THREADS", "4", 1);
  CHECK(worker_count() == 4);
  const SolveReport four = solve(p);
  ::unsetenv("SETOPT_THREADS");
  CHECK(one.sweff_set == four.sweff_set);
  CHECK(one.weff_set == four.weff_set);
  CHECK(one.psi == four.psi);
}
