#ifndef SETOPT_SCALARIZER_HPP
#define SETOPT_SCALARIZER_HPP

#include <span>
#include <vector>

#include "setopt/problem.hpp"

namespace setopt {

/// Psi_F(x) = min over F(x) of the Gerstewitz function. Minima are attained
/// because every cloud is finite.
ScalarValue psi_of_cloud(const Cone& cone, const PointCloud& cloud);

/// Psi_F on every grid point, plus its infimum M_F^q.
struct ScalarField {
  std::vector<ScalarValue> values;
  ScalarValue m_f_q = kInfinity;

  ScalarValue operator[](std::size_t i) const { return values[i]; }
};

ScalarField scalarize(const Problem& problem);

/// Psi_F at a grid point.
ScalarValue psi_f(const Problem& problem, std::span<const double> x);
ScalarValue m_f_q(const Problem& problem);

/// Colev(F, lambda q), computed from the definition (no strict domination of
/// F(x) by lambda q) and from the sublevel set [Psi_F <= lambda]. Both routes
/// share tie_tol; disagreement throws ConsistencyError. Returns the sublevel route.
GridSet colevel(const Problem& problem, const ScalarField& field, double lambda);
GridSet colevel(const Problem& problem, double lambda);

/// Colev(F, B) = {x : not B <^l F(x)}.
GridSet colevel_at_set(const Problem& problem, const PointCloud& b);

}  // namespace setopt

#endif
