#include "setopt/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "json_util.hpp"
#include "setopt/parallel.hpp"

namespace setopt {

using nlohmann::json;
using namespace detail;

Vec GridBox::step() const {
  Vec s(lower.size(), 0.0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (resolution[a] > 1) s[a] = (upper[a] - lower[a]) / static_cast<double>(resolution[a] - 1);
  }
  return s;
}

DomainGrid DomainGrid::from_points(std::vector<Vec> points) {
  if (points.empty()) throw ValidationError("empty grid");
  const std::size_t n = points.front().size();
  if (n == 0) throw ValidationError("grid points must have positive dimension");
  DomainGrid g;
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_dim(points[i], n, "grid point");
    for (double v : points[i]) {
      if (!std::isfinite(v)) throw ValidationError("grid points must be finite");
    }
    if (!g.index_.emplace(points[i], i).second) throw ValidationError("grid points must be distinct");
  }
  g.points_ = std::move(points);
  return g;
}

DomainGrid DomainGrid::from_box(GridBox box) {
  const std::size_t n = box.lower.size();
  if (n == 0 || box.upper.size() != n || box.resolution.size() != n) {
    throw ValidationError("grid box lower/upper/resolution must share a positive dimension");
  }
  std::size_t total = 1;
  for (std::size_t a = 0; a < n; ++a) {
    if (!(box.lower[a] <= box.upper[a])) throw ValidationError("grid box lower exceeds upper");
    if (box.resolution[a] == 0) throw ValidationError("empty grid");
    if (box.resolution[a] == 1 && box.lower[a] != box.upper[a]) {
      throw ValidationError("a resolution of 1 needs lower == upper");
    }
    total *= box.resolution[a];
  }
  std::vector<Vec> pts;
  pts.reserve(total);
  std::vector<std::size_t> idx(n, 0);
  Vec cur(n);
  for (std::size_t count = 0; count < total; ++count) {
    for (std::size_t a = 0; a < n; ++a) {
      cur[a] = lattice_point(box.lower[a], box.upper[a], idx[a], box.resolution[a]);
    }
    pts.push_back(cur);
    for (std::size_t a = n; a-- > 0;) {
      if (++idx[a] < box.resolution[a]) break;
      idx[a] = 0;
    }
  }
  DomainGrid g = from_points(std::move(pts));
  g.box_ = std::move(box);
  return g;
}

std::optional<std::size_t> DomainGrid::find(std::span<const double> x) const {
  auto it = index_.find(Vec(x.begin(), x.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DomainGrid::nearest(std::span<const double> x) const {
  require_dim(x, dim(), "point");
  std::size_t best = 0;
  double best_d = kInfinity;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    double d = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) d += (points_[i][a] - x[a]) * (points_[i][a] - x[a]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double DomainGrid::max_norm() const {
  double m = 0.0;
  for (const auto& p : points_) m = std::max(m, norm(p));
  return m;
}

double DomainGrid::spacing() const {
  if (box_) {
    double s = kInfinity;
    for (double v : box_->step()) {
      if (v > 0.0) s = std::min(s, v);
    }
    if (std::isfinite(s)) return s;
  }
  double s = kInfinity;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      double d = 0.0;
      for (std::size_t a = 0; a < dim(); ++a) d += (points_[i][a] - points_[j][a]) * (points_[i][a] - points_[j][a]);
      s = std::min(s, std::sqrt(d));
    }
  }
  return std::isfinite(s) ? s : 1.0;
}

Problem::Problem(DomainGrid grid, MapModel map, const Cone& cone, Tolerances tolerances, AssertedFlags flags)
    : grid_(std::move(grid)),
      map_(std::move(map)),
      cone_(cone.dual_generators(), cone.order_unit(), tolerances.cone_tol),
      tol_(tolerances),
      flags_(flags) {
  if (!(tol_.scal_tol > 0.0) || !(tol_.tie_tol > 0.0)) throw ValidationError("tolerances must be positive");
  if (map_.image_dim() != cone_.dim()) {
    throw ValidationError("dimension mismatch: map image dimension " + std::to_string(map_.image_dim()) +
                          " differs from cone dimension " + std::to_string(cone_.dim()));
  }
  if (map_.is_analytic()) {
    clouds_.resize(grid_.size());
    parallel_for(grid_.size(), [&](std::size_t i) { clouds_[i] = map_.evaluate_analytic(grid_.point(i)); });
  } else {
    if (map_.table_clouds().size() != grid_.size()) {
      throw ValidationError("table map lists " + std::to_string(map_.table_clouds().size()) +
                            " clouds for " + std::to_string(grid_.size()) + " grid points");
    }
    clouds_ = map_.table_clouds();
  }
  for (const auto& c : clouds_) {
    if (c->dim() != cone_.dim()) throw ValidationError("dimension mismatch: cloud and cone dimensions differ");
  }
}

std::size_t Problem::index_of(std::span<const double> x) const {
  require_dim(x, grid_.dim(), "domain point");
  auto i = grid_.find(x);
  if (!i) throw ValidationError("x not in grid");
  return *i;
}

const PointCloud& Problem::evaluate(std::span<const double> x) const { return cloud(index_of(x)); }

RayEvaluation Problem::evaluate_at(std::span<const double> x) const {
  require_dim(x, grid_.dim(), "domain point");
  if (map_.is_analytic()) return {map_.evaluate_analytic(x), 0.0};
  const std::size_t i = grid_.nearest(x);
  Vec d(x.begin(), x.end());
  for (std::size_t a = 0; a < d.size(); ++a) d[a] -= grid_.point(i)[a];
  return {clouds_[i], norm(d)};
}

Problem Problem::restricted_to_ball(double radius) const {
  std::vector<Vec> pts;
  std::vector<PointCloud> table;
  for (std::size_t i = 0; i < size(); ++i) {
    if (norm(grid_.point(i)) <= radius * (1.0 + 1e-12)) {
      pts.push_back(grid_.point(i));
      if (!map_.is_analytic()) table.push_back(cloud(i));
    }
  }
  if (pts.empty()) throw ValidationError("empty grid");
  MapModel m = map_.is_analytic() ? map_ : MapModel::table(std::move(table));
  return Problem(DomainGrid::from_points(std::move(pts)), std::move(m), cone_, tol_, flags_);
}

Problem build_problem(const json& doc) {
  if (!doc.is_object()) schema_error("document", "expected an object");
  const std::string version = text(field(doc, "schema_version", "document"), "schema_version");
  if (version != kSchemaVersion) schema_error("schema_version", "unsupported version '" + version + "'");

  const json& cone_doc = field(doc, "cone", "document");
  auto generators = matrix(field(cone_doc, "dual_generators", "cone"), "cone.dual_generators");
  Vec q = vector(field(cone_doc, "q", "cone"), "cone.q");

  Tolerances tol;
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) schema_error("tolerances", "expected an object");
    if (t.contains("cone_tol")) tol.cone_tol = number(t["cone_tol"], "tolerances.cone_tol");
    if (t.contains("scal_tol")) tol.scal_tol = number(t["scal_tol"], "tolerances.scal_tol");
    if (t.contains("tie_tol")) tol.tie_tol = number(t["tie_tol"], "tolerances.tie_tol");
  }
  if (!(tol.cone_tol > 0.0)) throw ValidationError("tolerances must be positive");
  AssertedFlags flags;
  if (doc.contains("flags")) {
    const json& f = doc["flags"];
    if (!f.is_object()) schema_error("flags", "expected an object");
    if (f.contains("K_q_set")) {
      if (!f["K_q_set"].is_boolean()) schema_error("flags.K_q_set", "expected a boolean");
      flags.k_q_set = f["K_q_set"].get<bool>();
    }
  }
  Cone cone(std::move(generators), std::move(q), tol.cone_tol);

  const json& dom = field(doc, "domain", "document");
  const bool has_points = dom.is_object() && dom.contains("points");
  const bool has_box = dom.is_object() && dom.contains("box");
  if (has_points == has_box) schema_error("domain", "exactly one of 'points' or 'box' is required");
  DomainGrid grid = [&] {
    if (has_points) {
      auto pts = matrix(dom["points"], "domain.points");
      if (pts.empty()) throw ValidationError("empty grid");
      return DomainGrid::from_points(std::move(pts));
    }
    const json& box = dom["box"];
    if (!box.is_array() || box.empty()) schema_error("domain.box", "expected a nonempty array of [lo, hi]");
    GridBox gb;
    for (std::size_t a = 0; a < box.size(); ++a) {
      Vec lohi = vector(box[a], "domain.box[" + std::to_string(a) + "]");
      if (lohi.size() != 2) schema_error("domain.box", "each axis needs [lo, hi]");
      gb.lower.push_back(lohi[0]);
      gb.upper.push_back(lohi[1]);
    }
    const json& res = field(dom, "resolution", "domain");
    if (!res.is_array() || res.size() != box.size()) {
      schema_error("domain.resolution", "expected one count per box axis");
    }
    for (const auto& r : res) gb.resolution.push_back(count(r, "domain.resolution"));
    return DomainGrid::from_box(std::move(gb));
  }();

  MapModel map = MapModel::from_json(field(doc, "map", "document"), grid.dim());
  return Problem(std::move(grid), std::move(map), cone, tol, flags);
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("unreadable file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return build_problem(doc);
}

json to_document(const Problem& problem) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json gens = json::array();
  for (const auto& w : problem.cone().dual_generators()) gens.push_back(w);
  doc["cone"] = {{"dual_generators", gens}, {"q", problem.cone().order_unit()}};
  const auto& grid = problem.grid();
  if (grid.box()) {
    json box = json::array();
    for (std::size_t a = 0; a < grid.dim(); ++a) box.push_back({grid.box()->lower[a], grid.box()->upper[a]});
    doc["domain"] = {{"box", box}, {"resolution", grid.box()->resolution}};
  } else {
    json pts = json::array();
    for (const auto& p : grid.points()) pts.push_back(p);
    doc["domain"] = {{"points", pts}};
  }
  doc["map"] = problem.map().to_json();
  const auto& t = problem.tolerances();
  doc["tolerances"] = {{"cone_tol", t.cone_tol}, {"scal_tol", t.scal_tol}, {"tie_tol", t.tie_tol}};
  doc["flags"] = {{"K_q_set", problem.flags().k_q_set}};
  return doc;
}

}  // namespace setopt
