#include "setopt/report_json.hpp"

#include <cmath>

namespace setopt {

using nlohmann::json;

json scalar_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "+inf" : "-inf";
}

json point_json(const Vec& p) {
  if (p.size() == 1) return p.front();
  return p;
}

json points_json(const Problem& problem, const GridSet& set) {
  json out = json::array();
  for (auto i : set) out.push_back(point_json(problem.grid().point(i)));
  return out;
}

json to_json(const Problem& problem, const SolveReport& r) {
  json psi = json::array();
  for (double v : r.psi) psi.push_back(scalar_json(v));
  return {{"m_f_q", scalar_json(r.m_f_q)},
          {"argmin", points_json(problem, r.argmin_set)},
          {"sweff", points_json(problem, r.sweff_set)},
          {"weff", points_json(problem, r.weff_set)},
          {"inclusion_argmin_in_sweff", r.inclusion_argmin_in_sweff},
          {"inclusion_sweff_in_weff", r.inclusion_sweff_in_weff},
          {"argmin_strictly_smaller", r.argmin_strictly_smaller},
          {"grid", points_json(problem, [&] {
             GridSet all(problem.size());
             for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
             return all;
           }())},
          {"psi", psi}};
}

json to_json(const Problem& problem, const ScalarField& f) {
  json rows = json::array();
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    rows.push_back({{"x", point_json(problem.grid().point(i))}, {"psi", scalar_json(f[i])}});
  }
  return {{"m_f_q", scalar_json(f.m_f_q)}, {"field", rows}};
}

json to_json(const AsymptoticEstimate& e) {
  json trace = json::array();
  for (double v : e.trace) trace.push_back(scalar_json(v));
  return {{"direction", e.direction},
          {"value", scalar_json(e.value)},
          {"diverging", e.diverging},
          {"t_values", e.t_values},
          {"trace", trace},
          {"max_snap_distance", e.max_snap_distance},
          {"direction_sequence", "constant"}};
}

json to_json(const Condition12Report& r) {
  json per = json::array();
  for (std::size_t k = 0; k < r.estimates.size(); ++k) {
    per.push_back({{"direction", r.estimates[k].direction},
                   {"value", scalar_json(r.estimates[k].value)},
                   {"above", static_cast<bool>(r.above[k])}});
  }
  json j = {{"m_f_q", scalar_json(r.m_f_q)},
            {"margin", r.margin},
            {"directions", per},
            {"holds", r.holds},
            {"sparse", r.sparse}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

json to_json(const HorizonReport& r) {
  return {{"lambdas", r.lambdas},
          {"tail_lambdas", r.tail_lambdas},
          {"radius_threshold", r.radius_threshold},
          {"directions", r.directions},
          {"trivial", r.trivial},
          {"condition_12_holds", r.condition_12_holds},
          {"consistent", r.consistent}};
}

json to_json(const CheckResult& r) {
  json j = {{"hypothesis", r.hypothesis}, {"verdict", to_string(r.verdict)}, {"evidence", r.evidence}};
  if (r.witness_point) j["witness_point"] = point_json(*r.witness_point);
  if (r.witness_lambda) j["witness_lambda"] = scalar_json(*r.witness_lambda);
  if (!r.limiting_resource.empty()) j["limiting_resource"] = r.limiting_resource;
  if (!r.caveat.empty()) j["caveat"] = r.caveat;
  return j;
}

json to_json(const HypothesisReport& r) {
  json kn = json::array();
  for (const auto& k : r.srgi_on_k) kn.push_back({{"radius", k.radius}, {"result", to_json(k.result)}});
  return {{"attainment", to_json(r.attainment)},
          {"srgi", to_json(r.srgi)},
          {"sgicc", to_json(r.sgicc)},
          {"condition_12", to_json(r.condition_12)},
          {"srgi_on_k", kn},
          {"k_q_set", r.k_q_set},
          {"f_bounded", r.f_bounded},
          {"coercive_theorem", {{"applies", r.coercive_applies}, {"blockers", r.coercive_blockers}}},
          {"noncoercive_theorem", {{"applies", r.noncoercive_applies}, {"blockers", r.noncoercive_blockers}}},
          {"sweff_size", r.sweff_size}};
}

}  // namespace setopt
