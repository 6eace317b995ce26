#include "setopt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "setopt/fixtures.hpp"
#include "setopt/oracle.hpp"
#include "setopt/report_json.hpp"

namespace setopt::cli {

namespace {

using nlohmann::json;

std::string shortest(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "+inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Vec parse_vector(const std::string& text, const char* what) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first < last && *first == ' ') ++first;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
      throw ValidationError(std::string(what) + ": cannot parse '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(std::string(what) + ": empty vector");
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct Options {
  std::string file;
  std::string format = "json";
  double lambda = 0.0;
  std::vector<std::string> directions;
  double t_min = 1.0;
  double t_max = 1e6;
  std::size_t t_steps = 40;
  std::vector<double> lambda_schedule;
  std::optional<double> radius;
  std::string trace_csv;
  bool srgi = false, sgicc = false, cond12 = false, transfer = false, attainment = false, report = false,
       all = false;
  std::optional<double> lambda_probe;
  std::vector<double> lambdas;
  std::string at;
  std::string oracle_target;
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  std::string out_dir = "fixtures";
};

std::vector<Vec> directions_or_default(const Options& o, std::size_t n) {
  if (o.directions.empty()) return default_directions(n);
  std::vector<Vec> out;
  for (const auto& d : o.directions) {
    Vec u = parse_vector(d, "direction");
    require_dim(u, n, "direction");
    if (norm(u) == 0.0) throw ValidationError("direction zero");
    out.push_back(std::move(u));
  }
  return out;
}

void cmd_solve(const Options& o, std::ostream& out) {
  const Problem p = load_problem(o.file);
  emit(out, to_json(p, solve(p)));
}

void cmd_scalarize(const Options& o, std::ostream& out) {
  const Problem p = load_problem(o.file);
  const ScalarField f = scalarize(p);
  if (o.format == "json") {
    emit(out, to_json(p, f));
    return;
  }
  for (std::size_t a = 0; a < p.grid().dim(); ++a) out << 'x' << (a + 1) << ',';
  out << "psi\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (double v : p.grid().point(i)) out << shortest(v) << ',';
    out << shortest(f[i]) << '\n';
  }
}

void cmd_colevel(const Options& o, std::ostream& out) {
  const Problem p = load_problem(o.file);
  emit(out, points_json(p, colevel(p, o.lambda)));
}

void cmd_asymptotic(const Options& o, std::ostream& out) {
  const Problem p = load_problem(o.file);
  const ScheduleParams params{o.t_min, o.t_max, o.t_steps};
  const auto dirs = directions_or_default(o, p.grid().dim());
  const Condition12Report c12 = check_condition_12(p, dirs, params);

  json estimates = json::array();
  for (const auto& e : c12.estimates) estimates.push_back(to_json(e));
  const std::vector<double> schedule =
      o.lambda_schedule.empty() ? default_lambda_schedule(scalarize(p)) : o.lambda_schedule;
  const double radius = o.radius ? *o.radius : default_radius_threshold(p);
  const HorizonReport horizon = horizon_limsup(p, schedule, radius, params);
  emit(out, {{"estimates", estimates}, {"condition_12", to_json(c12)}, {"horizon", to_json(horizon)}});

  if (!o.trace_csv.empty()) {
    std::ofstream csv(o.trace_csv);
    if (!csv) throw ValidationError("cannot write " + o.trace_csv);
    csv << "direction,t,psi\n";
    for (std::size_t k = 0; k < c12.estimates.size(); ++k) {
      const auto& e = c12.estimates[k];
      for (std::size_t s = 0; s < e.t_values.size(); ++s) {
        csv << k << ',' << shortest(e.t_values[s]) << ',' << shortest(e.trace[s]) << '\n';
      }
    }
  }
}

void cmd_check(const Options& o, std::ostream& out) {
  const Problem p = load_problem(o.file);
  const ScalarField field = scalarize(p);
  const bool any = o.srgi || o.sgicc || o.cond12 || o.transfer || o.attainment || o.report || !o.at.empty();
  const bool all = o.all || !any;
  json checks = json::object();
  if (all || o.attainment) checks["attainment"] = to_json(check_attainment(p));
  if (all || o.srgi) checks["srgi"] = to_json(check_srgi(p));
  if (all || o.sgicc) checks["sgicc"] = to_json(check_sgicc(p, o.lambda_probe.value_or(default_lambda_probe(field))));
  if (all || o.cond12) checks["condition_12"] = to_json(check_condition_12(p, default_directions(p.grid().dim())));
  if (all || o.transfer) {
    std::vector<double> samples = o.lambdas;
    if (samples.empty()) {
      const double top = default_lambda_probe(field) - field.m_f_q;
      for (int k = -1; k <= 10; ++k) samples.push_back(field.m_f_q + 2.0 * top * std::ldexp(1.0, -k - 1));
    }
    checks["transfer_closed"] = to_json(check_transfer_closed(p, samples));
  }
  if (!o.at.empty()) checks["colevel_compact_at"] = to_json(check_colevel_compact_at(p, parse_vector(o.at, "--at")));
  json doc = {{"checks", checks}};
  if (all || o.report) doc["report"] = to_json(weierstrass_report(p));
  emit(out, doc);
}

json summary_json(const OracleSummary& s, bool with_seed) {
  json j = {{"gerstewitz_samples", s.gerstewitz_samples},
            {"max_deviation", s.max_deviation},
            {"problems", s.problems},
            {"inclusion_violations", s.inclusion_violations}};
  if (with_seed) j["seed"] = s.seed;
  return j;
}

void cmd_oracle(const Options& o, std::ostream& out) {
  if (o.oracle_target == "random") {
    emit(out, summary_json(run_random_oracle(o.seed, o.count), true));
  } else {
    emit(out, summary_json(run_problem_oracle(load_problem(o.oracle_target)), false));
  }
}

void cmd_fixtures(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) throw ValidationError("cannot create " + o.out_dir + ": " + ec.message());
  json written = json::array();
  for (const auto& [stem, doc] : fixtures::all()) {
    if (to_document(build_problem(doc)) != doc) throw ConsistencyError("fixture " + stem + " does not round-trip");
    const fs::path path = fs::path(o.out_dir) / (stem + ".json");
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path.string());
    f << doc.dump(2) << '\n';
    written.push_back(path.string());
  }
  emit(out, {{"written", written}});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set optimization via scalarization, with existence diagnostics"};
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "argmin of Psi_F and the efficient sets");
  solve_cmd->add_option("file", o.file, "problem document")->required();

  auto* scal = app.add_subcommand("scalarize", "Psi_F on every grid point");
  scal->add_option("file", o.file, "problem document")->required();
  scal->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* col = app.add_subcommand("colevel", "Colev(F, lambda q)");
  col->add_option("file", o.file, "problem document")->required();
  col->add_option("--lambda", o.lambda, "level")->required();

  auto* asym = app.add_subcommand("asymptotic", "asymptotic function estimates and horizon limit");
  asym->add_option("file", o.file, "problem document")->required();
  asym->add_option("--direction,--directions", o.directions, "comma-separated direction, repeatable");
  asym->add_option("--t-min", o.t_min, "first ray parameter");
  asym->add_option("--t-max", o.t_max, "last ray parameter");
  asym->add_option("--t-steps", o.t_steps, "number of ray parameters");
  asym->add_option("--lambda-schedule", o.lambda_schedule, "levels decreasing to M_F^q")->delimiter(',');
  asym->add_option("--radius", o.radius, "far-point radius threshold");
  asym->add_option("--trace-csv", o.trace_csv, "write Psi_F along each ray as CSV");

  auto* chk = app.add_subcommand("check", "hypothesis verdicts");
  chk->add_option("file", o.file, "problem document")->required();
  chk->add_flag("--srgi", o.srgi);
  chk->add_flag("--sgicc", o.sgicc);
  chk->add_flag("--cond12", o.cond12);
  chk->add_flag("--transfer", o.transfer);
  chk->add_flag("--attainment", o.attainment);
  chk->add_flag("--report", o.report, "existence theorem summary");
  chk->add_flag("--all", o.all);
  chk->add_option("--lambda-probe", o.lambda_probe, "level for the sgicc check");
  chk->add_option("--lambdas", o.lambdas, "levels for transfer closedness")->delimiter(',');
  chk->add_option("--at", o.at, "grid point x0 for the colevel compactness check");

  auto* orc = app.add_subcommand("oracle", "cross-validation against brute force");
  orc->add_option("target", o.oracle_target, "'random' or a problem document")->required();
  orc->add_option("--seed", o.seed, "random seed");
  orc->add_option("--count", o.count, "number of random samples");

  auto* fix = app.add_subcommand("fixtures", "write the example problem documents");
  fix->add_option("--out", o.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*solve_cmd) cmd_solve(o, out);
    else if (*scal) cmd_scalarize(o, out);
    else if (*col) cmd_colevel(o, out);
    else if (*asym) cmd_asymptotic(o, out);
    else if (*chk) cmd_check(o, out);
    else if (*orc) cmd_oracle(o, out);
    else if (*fix) cmd_fixtures(o, out);
  } catch (const ValidationError& e) {
    err << "error: validation: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "error: consistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace setopt::cli
