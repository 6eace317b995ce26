#include "setopt/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "setopt/parallel.hpp"

namespace setopt {

RaySchedule RaySchedule::geometric(Vec direction, double t_min, double t_max, std::size_t steps) {
  if (!(t_min > 0.0) || !(t_max > t_min) || steps < 2) {
    throw ValidationError("ray schedule needs 0 < t_min < t_max and at least 2 steps");
  }
  RaySchedule s{std::move(direction), {}};
  const double lo = std::log(t_min);
  const double hi = std::log(t_max);
  for (std::size_t k = 0; k < steps; ++k) {
    if (k == 0) s.t_values.push_back(t_min);
    else if (k + 1 == steps) s.t_values.push_back(t_max);
    else s.t_values.push_back(std::exp(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1)));
  }
  s.validate();
  return s;
}

void RaySchedule::validate() const {
  if (norm(direction) == 0.0) throw ValidationError("direction zero");
  if (t_values.empty()) throw ValidationError("ray schedule is empty");
  for (std::size_t k = 0; k < t_values.size(); ++k) {
    if (!(t_values[k] > 0.0)) throw ValidationError("ray schedule values must be positive");
    if (k > 0 && !(t_values[k] > t_values[k - 1])) throw ValidationError("ray schedule must be strictly increasing");
  }
  if (t_values.back() < 1e4) throw ValidationError("ray schedule must reach at least 1e4");
}

AsymptoticEstimate f_g_infty(const Problem& problem, const RaySchedule& schedule) {
  require_dim(schedule.direction, problem.grid().dim(), "direction");
  schedule.validate();
  AsymptoticEstimate est;
  const double len = norm(schedule.direction);
  for (double v : schedule.direction) est.direction.push_back(v / len);
  est.t_values = schedule.t_values;
  est.trace.reserve(schedule.t_values.size());
  Vec x(schedule.direction.size());
  for (double t : schedule.t_values) {
    for (std::size_t a = 0; a < x.size(); ++a) x[a] = t * schedule.direction[a];
    const RayEvaluation ev = problem.evaluate_at(x);
    est.max_snap_distance = std::max(est.max_snap_distance, ev.snap_distance);
    est.trace.push_back(psi_of_cloud(problem.cone(), *ev.cloud));
  }

  const std::size_t n = est.trace.size();
  const std::size_t tail = std::max<std::size_t>(1, n / 4);
  const auto first = est.trace.end() - static_cast<std::ptrdiff_t>(tail);
  est.value = *std::min_element(first, est.trace.end());
  const bool nondecreasing = std::is_sorted(first, est.trace.end());
  est.diverging = tail > 1 && nondecreasing && est.trace.back() - *first > 1.0;
  if (est.diverging) est.value = kInfinity;
  return est;
}

std::vector<Vec> asymptotic_cone_estimate(const std::vector<Vec>& points, double radius_threshold,
                                          double angular_tol) {
  if (!(radius_threshold > 0.0)) throw ValidationError("radius_threshold must be positive");
  std::vector<Vec> reps;
  const double cos_tol = std::cos(angular_tol);
  for (const auto& p : points) {
    const double r = norm(p);
    if (r < radius_threshold) continue;
    Vec u(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) u[a] = p[a] / r;
    const bool known = std::any_of(reps.begin(), reps.end(), [&](const Vec& v) { return dot(u, v) >= cos_tol; });
    if (!known) reps.push_back(std::move(u));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<Vec> default_directions(std::size_t n) {
  std::vector<Vec> out;
  std::vector<int> digits(n, -1);
  for (;;) {
    if (std::any_of(digits.begin(), digits.end(), [](int d) { return d != 0; })) {
      Vec u(digits.begin(), digits.end());
      const double len = norm(u);
      for (double& v : u) v /= len;
      out.push_back(std::move(u));
    }
    std::size_t a = n;
    while (a > 0) {
      --a;
      if (++digits[a] <= 1) break;
      digits[a] = -1;
      if (a == 0) return out;
    }
    if (n == 0) return out;
  }
}

double default_radius_threshold(const Problem& problem) {
  const double r = 0.9 * problem.grid().max_norm();
  return r > 0.0 ? r : 1.0;
}

std::vector<double> harmonic_lambda_schedule(ScalarValue m_f_q, std::size_t count) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= count; ++k) out.push_back(m_f_q + 1.0 / static_cast<double>(k));
  return out;
}

std::vector<double> default_lambda_schedule(const ScalarField& field, std::size_t count) {
  const double hi = *std::max_element(field.values.begin(), field.values.end());
  const double spread = hi > field.m_f_q ? hi - field.m_f_q : 1.0;
  std::vector<double> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(field.m_f_q + spread * std::ldexp(1.0, -static_cast<int>(k)));
  return out;
}

Condition12Report check_condition_12(const Problem& problem, const std::vector<Vec>& directions,
                                     const ScheduleParams& params) {
  if (directions.empty()) throw ValidationError("the asymptotic condition needs at least one direction");
  Condition12Report r;
  r.m_f_q = m_f_q(problem);
  r.margin = 10.0 * problem.tolerances().tie_tol;
  r.sparse = directions.size() < 2 * problem.grid().dim();
  r.estimates.resize(directions.size());
  parallel_for(directions.size(), [&](std::size_t i) {
    r.estimates[i] =
        f_g_infty(problem, RaySchedule::geometric(directions[i], params.t_min, params.t_max, params.steps));
  });
  r.holds = true;
  for (const auto& e : r.estimates) {
    const bool above = e.value > r.m_f_q + r.margin;
    r.above.push_back(above);
    if (!above && r.holds) {
      r.holds = false;
      r.witness = e.direction;
    }
  }
  return r;
}

HorizonReport horizon_limsup(const Problem& problem, std::span<const double> lambdas, double radius_threshold,
                             const ScheduleParams& params) {
  const ScalarField field = scalarize(problem);
  if (lambdas.size() < 2) throw ValidationError("lambda schedule needs at least two values");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (!(lambdas[k] > field.m_f_q)) throw ValidationError("lambda schedule values must exceed M_F^q");
    if (k > 0 && !(lambdas[k] < lambdas[k - 1])) throw ValidationError("lambda schedule must be strictly decreasing");
  }
  // Heading to M_F^q: the last gap is at most a tenth of the first.
  if (lambdas.back() - field.m_f_q > 0.1 * (lambdas.front() - field.m_f_q)) {
    throw ValidationError("lambda schedule does not decrease toward M_F^q");
  }

  HorizonReport r;
  r.lambdas.assign(lambdas.begin(), lambdas.end());
  r.radius_threshold = radius_threshold;
  const std::size_t start = lambdas.size() / 2;
  std::vector<Vec> far;
  for (std::size_t k = start; k < lambdas.size(); ++k) {
    r.tail_lambdas.push_back(lambdas[k]);
    std::vector<Vec> pts;
    for (auto i : colevel(problem, field, lambdas[k])) pts.push_back(problem.grid().point(i));
    for (auto& d : asymptotic_cone_estimate(pts, radius_threshold)) far.push_back(std::move(d));
  }
  // Re-cluster the union; the unit vectors are all at radius 1.
  r.directions = asymptotic_cone_estimate(far, 0.5);
  r.trivial = r.directions.empty();
  r.condition_12_holds = check_condition_12(problem, default_directions(problem.grid().dim()), params).holds;
  r.consistent = r.trivial == r.condition_12_holds;
  return r;
}

}  // namespace setopt
