#include "setopt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "setopt/solver.hpp"

namespace setopt {

Cone random_cone(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> pos(0.1, 5.0);
  switch (kind(rng)) {
    case 0: return Cone::orthant({pos(rng), pos(rng)});
    case 1: return Cone::orthant({pos(rng), pos(rng), pos(rng)});
    default: {
      std::uniform_real_distribution<double> tilt(-0.9, 0.9);
      const double a = pos(rng);
      return Cone({{1.0, 1.0}, {1.0, -1.0}}, {a, a * tilt(rng)});
    }
  }
}

Problem random_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> grid_size(3, 8);
  std::uniform_int_distribution<int> cloud_size(1, 4);
  std::uniform_int_distribution<int> coord(-3, 3);
  const int n = grid_size(rng);
  std::vector<Vec> pts;
  std::vector<PointCloud> clouds;
  for (int i = 0; i < n; ++i) {
    pts.push_back({static_cast<double>(i)});
    std::vector<Vec> c;
    const int k = cloud_size(rng);
    for (int j = 0; j < k; ++j) c.push_back({static_cast<double>(coord(rng)), static_cast<double>(coord(rng))});
    clouds.push_back(make_cloud(std::move(c)));
  }
  std::bernoulli_distribution wedge(0.3);
  std::uniform_real_distribution<double> pos(0.5, 2.0);
  Cone cone = wedge(rng) ? Cone({{1.0, 1.0}, {1.0, -1.0}}, {pos(rng), 0.0}) : Cone::orthant({pos(rng), pos(rng)});
  return Problem(DomainGrid::from_points(std::move(pts)), MapModel::table(std::move(clouds)), cone);
}

namespace {

void check_inclusion(const Problem& problem, OracleSummary& s) {
  const GridSet argmin = argmin_scalarized(problem);
  const GridSet sweff = sweff_brute(problem);
  ++s.problems;
  if (!std::includes(sweff.begin(), sweff.end(), argmin.begin(), argmin.end())) ++s.inclusion_violations;
}

}  // namespace

OracleSummary run_random_oracle(std::uint64_t seed, std::size_t count) {
  OracleSummary s;
  s.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (std::size_t k = 0; k < count; ++k) {
    const Cone cone = random_cone(rng);
    Vec y(cone.dim());
    for (double& v : y) v = coord(rng);
    s.max_deviation = std::max(s.max_deviation, std::abs(cone.gerstewitz(y) - gerstewitz_oracle(cone, y, 1e-11)));
    ++s.gerstewitz_samples;
  }
  for (std::size_t k = 0; k < count / 5; ++k) check_inclusion(random_problem(rng), s);
  return s;
}

OracleSummary run_problem_oracle(const Problem& problem) {
  OracleSummary s;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    for (const auto& y : problem.cloud(i).points) {
      const double a = problem.cone().gerstewitz(y);
      const double b = gerstewitz_oracle(problem.cone(), y, 1e-11);
      s.max_deviation = std::max(s.max_deviation, std::abs(a - b));
      ++s.gerstewitz_samples;
    }
  }
  check_inclusion(problem, s);
  return s;
}

}  // namespace setopt
