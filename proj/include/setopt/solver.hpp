#ifndef SETOPT_SOLVER_HPP
#define SETOPT_SOLVER_HPP

#include <vector>

#include "setopt/scalarizer.hpp"

namespace setopt {

struct SolveReport {
  ScalarValue m_f_q = kInfinity;
  GridSet argmin_set;
  GridSet sweff_set;
  GridSet weff_set;
  bool inclusion_argmin_in_sweff = false;
  bool inclusion_sweff_in_weff = false;
  /// argmin is a proper subset of the strictly weakly efficient set.
  bool argmin_strictly_smaller = false;
  std::vector<ScalarValue> psi;
};

/// {x : Psi_F(x) <= M_F^q + tie_tol}.
GridSet argmin_scalarized(const Problem& problem, const ScalarField& field);
GridSet argmin_scalarized(const Problem& problem);

/// Strictly weakly l-efficient points: no other x with F(x) <^l F(xbar).
/// Full pairwise scan; the reference any faster solver must match.
GridSet sweff_brute(const Problem& problem);

/// Weakly l-efficient points: F(x) <^l F(xbar) forces F(xbar) <^l F(x).
GridSet weff_brute(const Problem& problem);

/// Throws ConsistencyError if argmin is not contained in the strictly
/// weakly efficient set.
SolveReport solve(const Problem& problem);

}  // namespace setopt

#endif
