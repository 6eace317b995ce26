#include "setopt/solver.hpp"

#include <algorithm>

#include "setopt/parallel.hpp"

namespace setopt {

namespace {

std::vector<PreparedCloud> prepare_all(const Problem& problem) {
  std::vector<PreparedCloud> out;
  out.reserve(problem.size());
  for (std::size_t i = 0; i < problem.size(); ++i) out.emplace_back(problem.cloud(i), problem.cone());
  return out;
}

GridSet collect(const std::vector<char>& flags) {
  GridSet out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

GridSet argmin_scalarized(const Problem& problem, const ScalarField& field) {
  GridSet out;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (field[i] <= field.m_f_q + problem.tolerances().tie_tol) out.push_back(i);
  }
  return out;
}

GridSet argmin_scalarized(const Problem& problem) { return argmin_scalarized(problem, scalarize(problem)); }

GridSet sweff_brute(const Problem& problem) {
  const auto clouds = prepare_all(problem);
  std::vector<char> efficient(problem.size(), 0);
  parallel_for(problem.size(), [&](std::size_t bar) {
    for (std::size_t x = 0; x < problem.size(); ++x) {
      if (x != bar && strictly_lower_less(clouds[x], clouds[bar], problem.cone())) return;
    }
    efficient[bar] = 1;
  });
  return collect(efficient);
}

GridSet weff_brute(const Problem& problem) {
  const auto clouds = prepare_all(problem);
  std::vector<char> efficient(problem.size(), 0);
  parallel_for(problem.size(), [&](std::size_t bar) {
    for (std::size_t x = 0; x < problem.size(); ++x) {
      if (strictly_lower_less(clouds[x], clouds[bar], problem.cone()) &&
          !strictly_lower_less(clouds[bar], clouds[x], problem.cone())) {
        return;
      }
    }
    efficient[bar] = 1;
  });
  return collect(efficient);
}

SolveReport solve(const Problem& problem) {
  const ScalarField field = scalarize(problem);
  SolveReport r;
  r.m_f_q = field.m_f_q;
  r.psi = field.values;
  r.argmin_set = argmin_scalarized(problem, field);
  r.sweff_set = sweff_brute(problem);
  r.weff_set = weff_brute(problem);
  r.inclusion_argmin_in_sweff =
      std::includes(r.sweff_set.begin(), r.sweff_set.end(), r.argmin_set.begin(), r.argmin_set.end());
  r.inclusion_sweff_in_weff =
      std::includes(r.weff_set.begin(), r.weff_set.end(), r.sweff_set.begin(), r.sweff_set.end());
  r.argmin_strictly_smaller = r.inclusion_argmin_in_sweff && r.argmin_set.size() < r.sweff_set.size();
  if (!r.inclusion_argmin_in_sweff) {
    throw ConsistencyError("argmin of Psi_F is not contained in the strictly weakly efficient set; check tie_tol");
  }
  if (!r.inclusion_sweff_in_weff) {
    throw ConsistencyError("strictly weakly efficient set is not contained in the weakly efficient set");
  }
  return r;
}

}  // namespace setopt
