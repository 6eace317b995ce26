#ifndef SETOPT_CONE_HPP
#define SETOPT_CONE_HPP

#include <span>
#include <vector>

#include "setopt/types.hpp"

namespace setopt {

inline constexpr double kDefaultConeTol = 1e-12;

/// Solid, proper, closed polyhedral cone P = {y : <w_j, y> >= 0 for all j}
/// given by its dual generators, together with an order unit q in int P.
class Cone {
 public:
  /// Throws ValidationError when a generator is zero, dimensions disagree,
  /// or q is not interior (some <w_j, q> <= 0).
  Cone(std::vector<Vec> dual_generators, Vec order_unit, double tol = kDefaultConeTol);

  /// The nonnegative orthant of dimension q.size().
  static Cone orthant(Vec order_unit, double tol = kDefaultConeTol);

  std::size_t dim() const { return order_unit_.size(); }
  const std::vector<Vec>& dual_generators() const { return generators_; }
  const Vec& order_unit() const { return order_unit_; }
  double tolerance() const { return tol_; }

  /// y in P, each constraint relaxed by the absolute tolerance.
  bool contains(std::span<const double> y) const;
  /// y in int P: every <w_j, y> exceeds the tolerance.
  bool contains_interior(std::span<const double> y) const;

  /// sup{t : y in tq + P} = min_j <w_j, y> / <w_j, q>.
  ScalarValue gerstewitz(std::span<const double> y) const;

  Cone with_order_unit(Vec order_unit) const;

 private:
  std::vector<Vec> generators_;
  Vec order_unit_;
  Vec unit_weights_;  // <w_j, q>
  double tol_;
};

/// Independent route to the scalarization: brackets sup{t : y - tq in P} by
/// exponential search, then bisects until the bracket is no wider than tol.
/// Membership is tested exactly (no tolerance).
ScalarValue gerstewitz_oracle(const Cone& cone, std::span<const double> y, double tol);

}  // namespace setopt

#endif
