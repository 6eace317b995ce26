#ifndef SETOPT_ASYMPTOTICS_HPP
#define SETOPT_ASYMPTOTICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "setopt/scalarizer.hpp"

namespace setopt {

/// Points t*u along a ray, t strictly increasing, positive, ending at >= 1e4.
struct RaySchedule {
  Vec direction;
  std::vector<double> t_values;

  static RaySchedule geometric(Vec direction, double t_min = 1.0, double t_max = 1e6, std::size_t steps = 40);
  void validate() const;
};

struct ScheduleParams {
  double t_min = 1.0;
  double t_max = 1e6;
  std::size_t steps = 40;
};

/// Estimate of the asymptotic function F^{G,inf}(u) along one ray.
///
/// The direction sequence is held constant (d_n = u), so the value is the
/// liminf of Psi_F(t u), taken as the minimum over the last quarter of the
/// schedule. A tail that keeps increasing by more than one unit is reported
/// as +inf.
struct AsymptoticEstimate {
  Vec direction;  // unit vector
  ScalarValue value = kInfinity;
  std::vector<double> t_values;
  std::vector<ScalarValue> trace;
  bool diverging = false;
  double max_snap_distance = 0.0;
};

AsymptoticEstimate f_g_infty(const Problem& problem, const RaySchedule& schedule);

/// Unit directions of the far points {x/|x| : |x| >= radius_threshold},
/// merged when closer than angular_tol radians. Empty for bounded input,
/// i.e. an asymptotic cone of {0}.
std::vector<Vec> asymptotic_cone_estimate(const std::vector<Vec>& points, double radius_threshold,
                                          double angular_tol = 1e-2);

/// The nonzero vectors of {-1, 0, 1}^n, normalized.
std::vector<Vec> default_directions(std::size_t n);

/// Nine tenths of the largest grid norm: "far" is the outer tenth of the sample.
double default_radius_threshold(const Problem& problem);

/// M_F^q + 1/k for k = 1..count.
std::vector<double> harmonic_lambda_schedule(ScalarValue m_f_q, std::size_t count = 20);

/// M_F^q + g 2^-k for k = 0..count-1, g the spread max Psi_F - M_F^q (1 if
/// Psi_F is constant). Scales with the data, so sampled problems whose Psi_F
/// sits a small gap above M_F^q are resolved.
std::vector<double> default_lambda_schedule(const ScalarField& field, std::size_t count = 20);

struct Condition12Report {
  ScalarValue m_f_q = kInfinity;
  double margin = 0.0;
  std::vector<AsymptoticEstimate> estimates;
  std::vector<bool> above;
  bool holds = false;
  /// Fewer directions than the 2n coordinate half-axes.
  bool sparse = false;
  std::optional<Vec> witness;
};

/// F^{G,inf}(u) > M_F^q + margin for every sampled direction, margin = 10 tie_tol.
Condition12Report check_condition_12(const Problem& problem, const std::vector<Vec>& directions,
                                     const ScheduleParams& params = {});

struct HorizonReport {
  std::vector<double> lambdas;
  std::vector<double> tail_lambdas;
  double radius_threshold = 0.0;
  std::vector<Vec> directions;
  bool trivial = true;
  bool condition_12_holds = false;
  /// trivial horizon limit <=> the asymptotic condition holds.
  bool consistent = false;
};

/// Union of the far-direction sets of Colev(F, lambda_n q) over the second
/// half of a schedule strictly decreasing toward M_F^q.
HorizonReport horizon_limsup(const Problem& problem, std::span<const double> lambdas, double radius_threshold,
                             const ScheduleParams& params = {});

}  // namespace setopt

#endif
