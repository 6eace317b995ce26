#ifndef SETOPT_DIAGNOSTICS_HPP
#define SETOPT_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "setopt/asymptotics.hpp"
#include "setopt/solver.hpp"

namespace setopt {

enum class Verdict { Holds, Fails, Inconclusive };

const char* to_string(Verdict v);

/// One hypothesis verdict. Fails always carries a witness (point or lambda);
/// inconclusive always names the limiting resource.
struct CheckResult {
  std::string hypothesis;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Vec> witness_point;
  std::optional<double> witness_lambda;
  std::string limiting_resource;
  std::string caveat;
  /// Free-form evidence: radii, grid step, colevel sets.
  nlohmann::json evidence = nlohmann::json::object();
};

/// Assumption (A): psi attains its infimum on every F(x). True for finite
/// clouds; a caveat is attached when a cloud samples an analytic set.
CheckResult check_attainment(const Problem& problem);

struct SrgiOptions {
  /// Strictly decreasing probe radii; empty means step * 10^-k, k = 0..8.
  std::vector<double> radii;
  /// Restrict the domain (and the probes) to the closed ball of this radius.
  std::optional<double> restrict_norm;
};

/// Regular-global-inf surrogate for Psi_F.
///
/// Analytic maps are probed off the grid at x0 + r d for the radii r and the
/// directions of default_directions(n). Every grid x0 with Psi_F(x0) above
/// the infimum by more than 10 tie_tol must keep its smallest-radius
/// neighbourhood minimum above that level too; otherwise x0 is the witness.
/// Table maps only see grid neighbours and can at best hold.
CheckResult check_srgi(const Problem& problem, const SrgiOptions& options = {});

/// Compares the intersection of Colev(F, lambda q) over the samples with the
/// intersection of their closures. Closures of analytic maps come from the
/// smallest-radius probes; table maps dilate by one grid step.
CheckResult check_transfer_closed(const Problem& problem, const std::vector<double>& lambda_samples);

/// Coercivity surrogate: some Colev(F, lambda q) with lambda on the ladder
/// M + (lambda_probe - M) 2^-k, k = 0..20, avoids the outer layer of the box.
CheckResult check_sgicc(const Problem& problem, double lambda_probe);

/// Boundedness of Colev(F, F(x0)) by the box criterion, plus the
/// disjunction "x0 efficient or sgicc" that boundedness must imply.
CheckResult check_colevel_compact_at(const Problem& problem, const Vec& x0);

/// lambda_probe used by the report: halfway between M_F^q and max Psi_F,
/// or M_F^q + 1 when Psi_F is constant.
double default_lambda_probe(const ScalarField& field);

struct KnCheck {
  double radius = 0.0;
  CheckResult result;
};

struct HypothesisReport {
  CheckResult attainment;
  CheckResult srgi;
  CheckResult sgicc;
  Condition12Report condition_12;
  std::vector<KnCheck> srgi_on_k;
  bool k_q_set = false;
  /// F(X) is a finite union of finite clouds.
  bool f_bounded = true;
  bool coercive_applies = false;
  bool noncoercive_applies = false;
  std::vector<std::string> coercive_blockers;
  std::vector<std::string> noncoercive_blockers;
  std::size_t sweff_size = 0;
};

/// Hypotheses of both existence theorems. Throws ConsistencyError when a
/// theorem applies but the brute-force efficient set is empty.
HypothesisReport weierstrass_report(const Problem& problem);

}  // namespace setopt

#endif
