#include "setopt/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "setopt/parallel.hpp"

namespace setopt {

namespace {

using nlohmann::json;

constexpr double kEdgeSlack = 1e-9;

CheckResult make(const char* name) {
  CheckResult r;
  r.hypothesis = name;
  return r;
}

json points_json(const Problem& problem, const GridSet& set) {
  json out = json::array();
  for (auto i : set) out.push_back(problem.grid().point(i));
  return out;
}

bool in_box(const GridBox& box, std::span<const double> p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double slack = kEdgeSlack * std::max(1.0, std::abs(box.upper[a] - box.lower[a]));
    if (p[a] < box.lower[a] - slack || p[a] > box.upper[a] + slack) return false;
  }
  return true;
}

/// At least one grid step away from every face of a nondegenerate axis.
bool strictly_inside(const GridBox& box, std::span<const double> p) {
  const Vec step = box.step();
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (box.resolution[a] < 2) continue;
    const double s = step[a] * (1.0 - kEdgeSlack);
    if (p[a] < box.lower[a] + s || p[a] > box.upper[a] - s) return false;
  }
  return true;
}

std::optional<std::size_t> first_outside(const Problem& problem, const GridSet& set) {
  for (auto i : set) {
    if (!strictly_inside(*problem.grid().box(), problem.grid().point(i))) return i;
  }
  return std::nullopt;
}

/// Off-grid evaluation of Psi_F around grid points of an analytic map.
class Prober {
 public:
  Prober(const Problem& problem, std::optional<double> restrict_norm)
      : problem_(problem), dirs_(default_directions(problem.grid().dim())), restrict_(restrict_norm) {}

  /// Minimum of Psi_F over the probes x0 + r d; +inf if all fall outside.
  double min_at(const Vec& x0, double r) const {
    double best = kInfinity;
    Vec p(x0.size());
    for (const auto& d : dirs_) {
      for (std::size_t a = 0; a < p.size(); ++a) p[a] = x0[a] + r * d[a];
      if (problem_.grid().box() && !in_box(*problem_.grid().box(), p)) continue;
      if (restrict_ && norm(p) > *restrict_) continue;
      best = std::min(best, psi_of_cloud(problem_.cone(), *problem_.map().evaluate_analytic(p)));
    }
    return best;
  }

 private:
  const Problem& problem_;
  std::vector<Vec> dirs_;
  std::optional<double> restrict_;
};

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

/// Grid neighbours within one grid step, the smallest radius with >= 2 grid points.
std::vector<GridSet> grid_neighbours(const Problem& problem, const GridSet& active, double step) {
  std::vector<GridSet> out(active.size());
  const double reach = step * (1.0 + kEdgeSlack);
  parallel_for(active.size(), [&](std::size_t k) {
    const Vec& x = problem.grid().point(active[k]);
    for (auto j : active) {
      if (j != active[k] && distance(x, problem.grid().point(j)) <= reach) out[k].push_back(j);
    }
  });
  return out;
}

GridSet intersect(const GridSet& a, const GridSet& b) {
  GridSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CheckResult check_attainment(const Problem& problem) {
  CheckResult r = make("attainment");
  r.verdict = Verdict::Holds;
  std::size_t sampled = 0;
  std::string note;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const auto& c = problem.cloud(i);
    if (c.sampling_note) {
      ++sampled;
      if (note.empty()) note = *c.sampling_note;
    }
  }
  if (sampled > 0) {
    r.caveat = "clouds sample analytic sets (" + std::to_string(sampled) + " of " + std::to_string(problem.size()) +
               "): " + note + "; attainment holds for the samples, not necessarily for the sets they approximate";
  }
  r.evidence["sampled_clouds"] = sampled;
  return r;
}

CheckResult check_srgi(const Problem& problem, const SrgiOptions& options) {
  CheckResult r = make("srgi");
  const ScalarField field = scalarize(problem);
  const double step = problem.grid().spacing();
  const double margin = 10.0 * problem.tolerances().tie_tol;

  std::vector<double> radii = options.radii;
  if (radii.empty()) {
    for (int k = 0; k <= 8; ++k) radii.push_back(step * std::pow(10.0, -k));
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0) || (k > 0 && !(radii[k] < radii[k - 1]))) {
      throw ValidationError("srgi radii must be positive and strictly decreasing");
    }
  }

  GridSet active;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!options.restrict_norm || norm(problem.grid().point(i)) <= *options.restrict_norm * (1.0 + 1e-12)) {
      active.push_back(i);
    }
  }
  r.evidence["grid_step"] = step;
  r.evidence["margin"] = margin;
  if (options.restrict_norm) r.evidence["restrict_norm"] = *options.restrict_norm;
  if (active.empty()) {
    r.verdict = Verdict::Holds;
    r.caveat = "no grid point in the restricted domain";
    return r;
  }

  double m = kInfinity;
  for (auto i : active) m = std::min(m, field[i]);

  if (problem.map().is_analytic()) {
    r.evidence["radii"] = radii;
    const Prober prober(problem, options.restrict_norm);
    std::vector<double> all_min(active.size(), kInfinity);
    std::vector<double> near_min(active.size(), kInfinity);
    const double r_min = radii.back();
    parallel_for(active.size(), [&](std::size_t k) {
      const Vec& x0 = problem.grid().point(active[k]);
      for (double rad : radii) all_min[k] = std::min(all_min[k], prober.min_at(x0, rad));
      near_min[k] = std::min(prober.min_at(x0, r_min), prober.min_at(x0, 0.5 * r_min));
      all_min[k] = std::min(all_min[k], near_min[k]);
    });
    for (double v : all_min) m = std::min(m, v);
    r.evidence["infimum_estimate"] = m;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const double v = field[active[k]];
      if (v > m + margin && !(near_min[k] > m + margin)) {
        r.verdict = Verdict::Fails;
        r.witness_point = problem.grid().point(active[k]);
        r.evidence["witness_value"] = v;
        r.evidence["neighbourhood_min"] = near_min[k];
        r.evidence["neighbourhood_radius"] = 0.5 * r_min;
        return r;
      }
    }
    r.verdict = Verdict::Holds;
    return r;
  }

  r.evidence["infimum_estimate"] = m;
  r.evidence["radii"] = std::vector<double>{step};
  const auto nbrs = grid_neighbours(problem, active, step);
  for (std::size_t k = 0; k < active.size(); ++k) {
    const double v = field[active[k]];
    if (!(v > m + margin)) continue;
    double low = kInfinity;
    for (auto j : nbrs[k]) low = std::min(low, field[j]);
    if (!(low > m + margin)) {
      r.verdict = Verdict::Inconclusive;
      r.limiting_resource = "grid resolution";
      r.evidence["unresolved_point"] = problem.grid().point(active[k]);
      return r;
    }
  }
  r.verdict = Verdict::Holds;
  return r;
}

CheckResult check_transfer_closed(const Problem& problem, const std::vector<double>& lambda_samples) {
  CheckResult r = make("transfer_closed");
  const ScalarField field = scalarize(problem);
  if (lambda_samples.empty()) throw ValidationError("transfer closedness needs at least one lambda sample");
  for (double l : lambda_samples) {
    if (!(l > field.m_f_q)) throw ValidationError("lambda samples must exceed M_F^q");
  }
  const double tie = problem.tolerances().tie_tol;
  const double step = problem.grid().spacing();
  r.evidence["grid_step"] = step;
  r.evidence["lambda_samples"] = lambda_samples;

  std::vector<GridSet> sets;
  for (double l : lambda_samples) sets.push_back(colevel(problem, field, l));

  std::vector<GridSet> closures;
  const bool analytic = problem.map().is_analytic();
  if (analytic) {
    const double r_min = step * 1e-8;
    r.evidence["closure_radius"] = r_min;
    const Prober prober(problem, std::nullopt);
    std::vector<double> near(problem.size());
    parallel_for(problem.size(), [&](std::size_t i) {
      const Vec& x = problem.grid().point(i);
      near[i] = std::min({field[i], prober.min_at(x, r_min), prober.min_at(x, 0.5 * r_min)});
    });
    for (double l : lambda_samples) {
      GridSet c;
      for (std::size_t i = 0; i < problem.size(); ++i) {
        if (near[i] <= l + tie) c.push_back(i);
      }
      closures.push_back(std::move(c));
    }
  } else {
    r.evidence["closure_radius"] = step;
    GridSet all(problem.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto nbrs = grid_neighbours(problem, all, step);
    for (const auto& s : sets) {
      std::vector<char> mark(problem.size(), 0);
      for (auto i : s) {
        mark[i] = 1;
        for (auto j : nbrs[i]) mark[j] = 1;
      }
      GridSet c;
      for (std::size_t i = 0; i < mark.size(); ++i) {
        if (mark[i]) c.push_back(i);
      }
      closures.push_back(std::move(c));
    }
  }

  GridSet inter = sets.front();
  GridSet inter_cl = closures.front();
  for (std::size_t k = 1; k < sets.size(); ++k) {
    inter = intersect(inter, sets[k]);
    inter_cl = intersect(inter_cl, closures[k]);
  }
  r.evidence["intersection"] = points_json(problem, inter);
  r.evidence["closure_intersection"] = points_json(problem, inter_cl);
  if (inter == inter_cl) {
    r.verdict = Verdict::Holds;
    return r;
  }

  GridSet extra;
  std::set_difference(inter_cl.begin(), inter_cl.end(), inter.begin(), inter.end(), std::back_inserter(extra));
  const std::size_t x = extra.front();
  r.witness_point = problem.grid().point(x);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (!std::binary_search(sets[k].begin(), sets[k].end(), x)) {
      r.witness_lambda = lambda_samples[k];
      break;
    }
  }
  if (analytic) {
    r.verdict = Verdict::Fails;
  } else {
    r.verdict = Verdict::Inconclusive;
    r.limiting_resource = "grid resolution";
  }
  return r;
}

CheckResult check_sgicc(const Problem& problem, double lambda_probe) {
  CheckResult r = make("sgicc");
  const ScalarField field = scalarize(problem);
  if (!(lambda_probe > field.m_f_q)) throw ValidationError("lambda_probe must exceed M_F^q");
  r.evidence["lambda_probe"] = lambda_probe;
  if (!problem.grid().box()) {
    r.verdict = Verdict::Inconclusive;
    r.limiting_resource = "box size";
    return r;
  }
  const double m = field.m_f_q;
  GridSet last;
  double last_lambda = lambda_probe;
  for (int k = 0; k <= 20; ++k) {
    const double l = m + (lambda_probe - m) * std::ldexp(1.0, -k);
    if (!(l > m)) break;
    GridSet c = colevel(problem, field, l);
    if (!first_outside(problem, c)) {
      r.verdict = Verdict::Holds;
      r.witness_lambda = l;
      r.evidence["colevel"] = points_json(problem, c);
      return r;
    }
    last = std::move(c);
    last_lambda = l;
  }
  r.verdict = Verdict::Fails;
  r.witness_lambda = last_lambda;
  r.witness_point = problem.grid().point(*first_outside(problem, last));
  return r;
}

double default_lambda_probe(const ScalarField& field) {
  const double hi = *std::max_element(field.values.begin(), field.values.end());
  if (!(hi > field.m_f_q)) return field.m_f_q + 1.0;
  return field.m_f_q + 0.5 * (hi - field.m_f_q);
}

CheckResult check_colevel_compact_at(const Problem& problem, const Vec& x0) {
  CheckResult r = make("colevel_compact_at");
  const std::size_t i0 = problem.index_of(x0);
  const GridSet set = colevel_at_set(problem, problem.cloud(i0));
  const GridSet sweff = sweff_brute(problem);
  const bool in_sweff = std::binary_search(sweff.begin(), sweff.end(), i0);
  const CheckResult sgicc = check_sgicc(problem, default_lambda_probe(scalarize(problem)));
  const bool disjunction = in_sweff || sgicc.verdict == Verdict::Holds;
  r.evidence["x0"] = x0;
  r.evidence["colevel"] = points_json(problem, set);
  r.evidence["x0_in_sweff"] = in_sweff;
  r.evidence["sgicc"] = to_string(sgicc.verdict);
  r.evidence["disjunction"] = disjunction;

  if (!problem.grid().box()) {
    r.verdict = Verdict::Inconclusive;
    r.limiting_resource = "box size";
    return r;
  }
  if (auto out = first_outside(problem, set)) {
    r.verdict = Verdict::Fails;
    r.witness_point = problem.grid().point(*out);
    r.caveat = "colevel set reaches the box boundary; the bounded-colevel existence criterion does not apply";
    return r;
  }
  if (!disjunction) {
    throw ConsistencyError("bounded colevel at x0 but x0 is not efficient and sgicc fails");
  }
  r.verdict = Verdict::Holds;
  return r;
}

namespace {

std::vector<double> k_radii(double max_norm) {
  std::vector<double> out;
  const double top = std::max(1.0, std::ceil(max_norm));
  if (top <= 16.0) {
    for (double n = 1.0; n <= top; n += 1.0) out.push_back(n);
    return out;
  }
  for (double n = 1.0; n <= 8.0; n += 1.0) out.push_back(n);
  for (double n = 16.0;; n *= 2.0) {
    out.push_back(n);
    if (n >= max_norm) break;
  }
  return out;
}

std::string format_radius(double n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

}  // namespace

HypothesisReport weierstrass_report(const Problem& problem) {
  HypothesisReport rep;
  const ScalarField field = scalarize(problem);
  rep.attainment = check_attainment(problem);
  rep.srgi = check_srgi(problem);
  rep.sgicc = check_sgicc(problem, default_lambda_probe(field));
  rep.condition_12 = check_condition_12(problem, default_directions(problem.grid().dim()));
  for (double n : k_radii(problem.grid().max_norm())) {
    SrgiOptions opt;
    opt.restrict_norm = n;
    rep.srgi_on_k.push_back({n, check_srgi(problem, opt)});
  }
  rep.k_q_set = problem.flags().k_q_set;

  const bool attained = rep.attainment.verdict == Verdict::Holds;
  if (!attained) rep.coercive_blockers.push_back("attainment");
  if (rep.srgi.verdict != Verdict::Holds) rep.coercive_blockers.push_back("srgi");
  if (rep.sgicc.verdict != Verdict::Holds) rep.coercive_blockers.push_back("sgicc");
  rep.coercive_applies = rep.coercive_blockers.empty();

  if (!attained) rep.noncoercive_blockers.push_back("attainment");
  for (const auto& k : rep.srgi_on_k) {
    if (k.result.verdict != Verdict::Holds) rep.noncoercive_blockers.push_back("srgi on K_" + format_radius(k.radius));
  }
  if (!rep.condition_12.holds) rep.noncoercive_blockers.push_back("asymptotic condition");
  if (!rep.k_q_set) rep.noncoercive_blockers.push_back("K_q_set not asserted");
  rep.noncoercive_applies = rep.noncoercive_blockers.empty();

  rep.sweff_size = sweff_brute(problem).size();
  if ((rep.coercive_applies || rep.noncoercive_applies) && rep.sweff_size == 0) {
    throw ConsistencyError("an existence theorem applies but the efficient set is empty");
  }
  return rep;
}

}  // namespace setopt
