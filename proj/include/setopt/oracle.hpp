#ifndef SETOPT_ORACLE_HPP
#define SETOPT_ORACLE_HPP

#include <cstdint>
#include <random>

#include "setopt/problem.hpp"

namespace setopt {

/// R^2_+, R^3_+ or {-y1 <= y2 <= y1}, with a random interior order unit.
Cone random_cone(std::mt19937_64& rng);

/// Small table problem on integer grid points with integer clouds in R^2,
/// so that ties and equal clouds occur often.
Problem random_problem(std::mt19937_64& rng);

struct OracleSummary {
  std::uint64_t seed = 0;
  std::size_t gerstewitz_samples = 0;
  double max_deviation = 0.0;
  std::size_t problems = 0;
  std::size_t inclusion_violations = 0;
};

/// Closed form against bisection on `count` random (cone, y) pairs with y in
/// [-10, 10]^m, and argmin against the efficient set on count / 5 random problems.
OracleSummary run_random_oracle(std::uint64_t seed, std::size_t count);

/// The same cross-checks on every cloud point and on the problem itself.
OracleSummary run_problem_oracle(const Problem& problem);

}  // namespace setopt

#endif
