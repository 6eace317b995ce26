#include "setopt/scalarizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "setopt/parallel.hpp"

namespace setopt {

ScalarValue psi_of_cloud(const Cone& cone, const PointCloud& cloud) {
  ScalarValue best = kInfinity;
  for (const auto& y : cloud.points) best = std::min(best, cone.gerstewitz(y));
  return best;
}

ScalarField scalarize(const Problem& problem) {
  ScalarField field;
  field.values.resize(problem.size());
  parallel_for(problem.size(),
               [&](std::size_t i) { field.values[i] = psi_of_cloud(problem.cone(), problem.cloud(i)); });
  field.m_f_q = *std::min_element(field.values.begin(), field.values.end());
  return field;
}

ScalarValue psi_f(const Problem& problem, std::span<const double> x) {
  return psi_of_cloud(problem.cone(), problem.evaluate(x));
}

ScalarValue m_f_q(const Problem& problem) { return scalarize(problem).m_f_q; }

GridSet colevel(const Problem& problem, const ScalarField& field, double lambda) {
  const double tie = problem.tolerances().tie_tol;
  const Cone& cone = problem.cone();

  // The shifted level keeps the definitional route on the same side of ties
  // as the sublevel route.
  Vec level = cone.order_unit();
  for (double& v : level) v *= lambda + tie;
  const PointCloud reference = make_cloud({level});

  GridSet by_definition;
  GridSet by_sublevel;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!strictly_lower_less(reference, problem.cloud(i), cone)) by_definition.push_back(i);
    if (field[i] <= lambda + tie) by_sublevel.push_back(i);
  }
  if (by_definition != by_sublevel) {
    std::ostringstream msg;
    msg << "colevel routes disagree at lambda=" << lambda << " (" << by_definition.size() << " vs "
        << by_sublevel.size() << " points); check cone_tol/tie_tol";
    throw ConsistencyError(msg.str());
  }
  return by_sublevel;
}

GridSet colevel(const Problem& problem, double lambda) { return colevel(problem, scalarize(problem), lambda); }

GridSet colevel_at_set(const Problem& problem, const PointCloud& b) {
  if (b.dim() != problem.cone().dim()) throw ValidationError("dimension mismatch: B and image dimensions differ");
  const PreparedCloud prepared_b(b, problem.cone());
  std::vector<char> member(problem.size(), 0);
  parallel_for(problem.size(), [&](std::size_t i) {
    const PreparedCloud fx(problem.cloud(i), problem.cone());
    member[i] = !strictly_lower_less(prepared_b, fx, problem.cone());
  });
  GridSet out;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) out.push_back(i);
  }
  return out;
}

}  // namespace setopt
