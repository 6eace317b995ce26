#ifndef SETOPT_REPORT_JSON_HPP
#define SETOPT_REPORT_JSON_HPP

#include <json.hpp>

#include "setopt/diagnostics.hpp"

namespace setopt {

/// Finite values as numbers, infinities as the strings "+inf" / "-inf".
nlohmann::json scalar_json(double v);
/// One-dimensional points as plain numbers, others as arrays.
nlohmann::json point_json(const Vec& p);
nlohmann::json points_json(const Problem& problem, const GridSet& set);

nlohmann::json to_json(const Problem& problem, const SolveReport& r);
nlohmann::json to_json(const Problem& problem, const ScalarField& f);
nlohmann::json to_json(const AsymptoticEstimate& e);
nlohmann::json to_json(const Condition12Report& r);
nlohmann::json to_json(const HorizonReport& r);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const HypothesisReport& r);

}  // namespace setopt

#endif
