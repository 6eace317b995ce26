#include "setopt/map_model.hpp"

#include <cmath>
#include <numbers>

#include "json_util.hpp"

namespace setopt {

using nlohmann::json;
using namespace detail;

namespace {

std::vector<Expr> parse_exprs(const json& v, const std::vector<std::string>& vars, const std::string& where) {
  if (!v.is_array() || v.empty()) schema_error(where, "expected a nonempty array of expressions");
  std::vector<Expr> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(Expr::parse(text(v[i], where), vars));
  }
  return out;
}

json exprs_to_json(const std::vector<Expr>& es) {
  json arr = json::array();
  for (const auto& e : es) arr.push_back(e.source());
  return arr;
}

json points_to_json(const std::vector<Vec>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(p);
  return arr;
}

Vec eval_all(const std::vector<Expr>& es, std::span<const double> x) {
  Vec out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(e.eval(x));
  return out;
}

double lattice(double lo, double hi, std::size_t k, std::size_t n) {
  return lattice_point(lo, hi, k, n);
}

std::vector<Vec> box_points(const Vec& lo, const Vec& hi, const std::vector<std::size_t>& res) {
  std::vector<Vec> pts;
  Vec cur(lo.size());
  std::vector<std::size_t> idx(lo.size(), 0);
  for (;;) {
    for (std::size_t a = 0; a < lo.size(); ++a) cur[a] = lattice(lo[a], hi[a], idx[a], res[a]);
    pts.push_back(cur);
    std::size_t a = lo.size();
    while (a > 0) {
      --a;
      if (++idx[a] < res[a]) break;
      idx[a] = 0;
      if (a == 0) return pts;
    }
  }
}

// Unit circle point at angle 2*pi*k/n, exact at quarter turns.
std::pair<double, double> circle_point(std::size_t k, std::size_t n) {
  if ((4 * k) % n == 0) {
    switch ((4 * k / n) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

CloudConstructor CloudConstructor::fixed(PointCloud cloud) {
  CloudConstructor c;
  c.shape_ = Points{};
  c.note_ = cloud.sampling_note;
  c.image_dim_ = cloud.dim();
  c.fixed_ = std::make_shared<const PointCloud>(std::move(cloud));
  return c;
}

CloudConstructor CloudConstructor::from_json(const json& doc, std::size_t domain_dim) {
  const std::string where = "cloud";
  const std::string type = text(field(doc, "type", where), where + ".type");
  std::optional<std::string> note;
  if (doc.contains("note")) note = text(doc["note"], where + ".note");
  const auto vars = Expr::domain_variables(domain_dim);

  CloudConstructor c;
  c.note_ = note;
  if (type == "points") {
    auto pts = matrix(field(doc, "points", where), where + ".points");
    c = fixed(make_cloud(std::move(pts), note));
  } else if (type == "point") {
    Point p{parse_exprs(field(doc, "coords", where), vars, where + ".coords")};
    c.image_dim_ = p.coords.size();
    c.shape_ = std::move(p);
  } else if (type == "interval") {
    Interval iv{Expr::parse(text(field(doc, "lower", where), where + ".lower"), vars),
                Expr::parse(text(field(doc, "upper", where), where + ".upper"), vars),
                count(field(doc, "samples", where), where + ".samples")};
    if (iv.samples < 2) schema_error(where + ".samples", "interval needs at least 2 samples");
    c.image_dim_ = 1;
    c.shape_ = std::move(iv);
  } else if (type == "ball") {
    Ball b{parse_exprs(field(doc, "center", where), vars, where + ".center"),
           number(field(doc, "radius", where), where + ".radius"),
           count(field(doc, "samples", where), where + ".samples")};
    if (b.center.size() > 2) schema_error(where + ".center", "ball clouds support image dimension 1 or 2");
    if (!(b.radius >= 0.0)) schema_error(where + ".radius", "radius must be nonnegative");
    if (b.samples < 2) schema_error(where + ".samples", "ball needs at least 2 samples");
    c.image_dim_ = b.center.size();
    c.shape_ = std::move(b);
  } else if (type == "box") {
    Box bx{vector(field(doc, "lower", where), where + ".lower"),
           vector(field(doc, "upper", where), where + ".upper"), {}};
    const json& res = field(doc, "resolution", where);
    if (!res.is_array()) schema_error(where + ".resolution", "expected an array");
    for (const auto& r : res) bx.resolution.push_back(count(r, where + ".resolution"));
    if (bx.lower.empty() || bx.lower.size() != bx.upper.size() || bx.lower.size() != bx.resolution.size()) {
      schema_error(where, "box lower/upper/resolution must share a positive dimension");
    }
    for (std::size_t a = 0; a < bx.lower.size(); ++a) {
      if (bx.lower[a] > bx.upper[a]) schema_error(where, "box lower exceeds upper");
      if (bx.resolution[a] == 0) schema_error(where + ".resolution", "resolution must be positive");
    }
    auto cloud = make_cloud(box_points(bx.lower, bx.upper, bx.resolution), note);
    c.image_dim_ = bx.lower.size();
    c.fixed_ = std::make_shared<const PointCloud>(std::move(cloud));
    c.shape_ = std::move(bx);
  } else if (type == "parametric") {
    const json& t = field(doc, "t", where);
    const std::string spacing = text(field(t, "spacing", where + ".t"), where + ".t.spacing");
    Parametric pc{parse_exprs(field(doc, "coords", where), {"t"}, where + ".coords"),
                  spacing == "log" ? Spacing::Log : Spacing::Linear,
                  number(field(t, "lower", where + ".t"), where + ".t.lower"),
                  number(field(t, "upper", where + ".t"), where + ".t.upper"),
                  count(field(t, "count", where + ".t"), where + ".t.count")};
    if (spacing != "log" && spacing != "linear") schema_error(where + ".t.spacing", "expected linear or log");
    if (pc.count == 0 || pc.lower > pc.upper) schema_error(where + ".t", "need count >= 1 and lower <= upper");
    if (pc.spacing == Spacing::Log && !(pc.lower > 0.0)) schema_error(where + ".t", "log spacing needs lower > 0");
    std::vector<Vec> pts;
    pts.reserve(pc.count);
    for (std::size_t k = 0; k < pc.count; ++k) {
      double tv = 0.0;
      if (pc.spacing == Spacing::Linear) {
        tv = lattice(pc.lower, pc.upper, k, pc.count);
      } else if (k + 1 == pc.count && pc.count > 1) {
        tv = pc.upper;
      } else if (k == 0) {
        tv = pc.lower;
      } else {
        tv = std::exp(lattice(std::log(pc.lower), std::log(pc.upper), k, pc.count));
      }
      const double arg[1] = {tv};
      pts.push_back(eval_all(pc.coords, arg));
    }
    auto cloud = make_cloud(std::move(pts), note);
    c.image_dim_ = pc.coords.size();
    c.fixed_ = std::make_shared<const PointCloud>(std::move(cloud));
    c.shape_ = std::move(pc);
  } else {
    schema_error(where + ".type", "unknown cloud type '" + type + "'");
  }
  return c;
}

json CloudConstructor::to_json() const {
  json j = std::visit(
      [&](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Points>) {
          return {{"type", "points"}, {"points", points_to_json(fixed_->points)}};
        } else if constexpr (std::is_same_v<T, Point>) {
          return {{"type", "point"}, {"coords", exprs_to_json(s.coords)}};
        } else if constexpr (std::is_same_v<T, Interval>) {
          return {{"type", "interval"}, {"lower", s.lower.source()}, {"upper", s.upper.source()},
                  {"samples", s.samples}};
        } else if constexpr (std::is_same_v<T, Ball>) {
          return {{"type", "ball"}, {"center", exprs_to_json(s.center)}, {"radius", s.radius},
                  {"samples", s.samples}};
        } else if constexpr (std::is_same_v<T, Box>) {
          return {{"type", "box"}, {"lower", s.lower}, {"upper", s.upper}, {"resolution", s.resolution}};
        } else {
          return {{"type", "parametric"},
                  {"coords", exprs_to_json(s.coords)},
                  {"t",
                   {{"spacing", s.spacing == Spacing::Log ? "log" : "linear"},
                    {"lower", s.lower},
                    {"upper", s.upper},
                    {"count", s.count}}}};
        }
      },
      shape_);
  if (note_) j["note"] = *note_;
  return j;
}

CloudPtr CloudConstructor::build(std::span<const double> x) const {
  if (fixed_) return fixed_;
  return std::visit(
      [&](const auto& s) -> CloudPtr {
        using T = std::decay_t<decltype(s)>;
        std::vector<Vec> pts;
        if constexpr (std::is_same_v<T, Point>) {
          pts.push_back(eval_all(s.coords, x));
        } else if constexpr (std::is_same_v<T, Interval>) {
          const double lo = s.lower.eval(x);
          const double hi = s.upper.eval(x);
          if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("interval bound is not finite");
          if (lo > hi) {
            throw ValidationError("interval violation: lower " + std::to_string(lo) + " exceeds upper " +
                                  std::to_string(hi));
          }
          if (lo == hi) {
            pts.push_back({lo});
          } else {
            for (std::size_t k = 0; k < s.samples; ++k) pts.push_back({lattice(lo, hi, k, s.samples)});
          }
        } else if constexpr (std::is_same_v<T, Ball>) {
          const Vec c = eval_all(s.center, x);
          if (c.size() == 1) {
            for (std::size_t k = 0; k < s.samples; ++k) {
              pts.push_back({lattice(c[0] - s.radius, c[0] + s.radius, k, s.samples)});
            }
          } else {
            for (std::size_t k = 0; k < s.samples; ++k) {
              const auto [cx, sy] = circle_point(k, s.samples);
              pts.push_back({c[0] + s.radius * cx, c[1] + s.radius * sy});
            }
          }
        }
        for (const auto& p : pts) {
          for (double v : p) {
            if (!std::isfinite(v)) throw ValidationError("map produced a non-finite cloud point");
          }
        }
        return std::make_shared<const PointCloud>(make_cloud(std::move(pts), note_));
      },
      shape_);
}

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Table: return "table";
    case MapKind::Interval: return "interval";
    case MapKind::Ball: return "ball";
    case MapKind::Piecewise: return "piecewise";
    case MapKind::Constant: return "constant";
  }
  return "?";
}

MapModel MapModel::table(std::vector<PointCloud> clouds) {
  if (clouds.empty()) throw ValidationError("table map needs at least one cloud");
  MapModel m;
  m.kind_ = MapKind::Table;
  m.image_dim_ = clouds.front().dim();
  for (auto& c : clouds) {
    if (c.dim() != m.image_dim_) throw ValidationError("table clouds must share one image dimension");
    m.table_.push_back(std::make_shared<const PointCloud>(std::move(c)));
  }
  return m;
}

MapModel MapModel::constant(PointCloud cloud) {
  MapModel m;
  m.kind_ = MapKind::Constant;
  m.image_dim_ = cloud.dim();
  m.pieces_.push_back({std::nullopt, CloudConstructor::fixed(std::move(cloud))});
  return m;
}

MapModel MapModel::piecewise(std::vector<MapPiece> pieces) {
  if (pieces.empty()) throw ValidationError("piecewise map needs at least one piece");
  MapModel m;
  m.kind_ = MapKind::Piecewise;
  m.image_dim_ = pieces.front().cloud.image_dim();
  for (const auto& p : pieces) {
    if (p.cloud.image_dim() != m.image_dim_) throw ValidationError("pieces must share one image dimension");
  }
  m.pieces_ = std::move(pieces);
  return m;
}

MapModel MapModel::from_json(const json& doc, std::size_t domain_dim) {
  const std::string kind = text(field(doc, "kind", "map"), "map.kind");
  const json& params = field(doc, "parameters", "map");
  if (!params.is_object()) schema_error("map.parameters", "expected an object");
  const auto vars = Expr::domain_variables(domain_dim);

  if (kind == "table") {
    const json& clouds = field(params, "clouds", "map.parameters");
    if (!clouds.is_array()) schema_error("map.parameters.clouds", "expected an array");
    std::vector<PointCloud> out;
    for (std::size_t i = 0; i < clouds.size(); ++i) {
      out.push_back(make_cloud(matrix(clouds[i], "map.parameters.clouds[" + std::to_string(i) + "]")));
    }
    return table(std::move(out));
  }
  if (kind == "constant") {
    MapModel m;
    m.kind_ = MapKind::Constant;
    m.pieces_.push_back({std::nullopt, CloudConstructor::from_json(field(params, "cloud", "map.parameters"),
                                                                   domain_dim)});
    m.image_dim_ = m.pieces_.front().cloud.image_dim();
    return m;
  }
  if (kind == "interval" || kind == "ball") {
    json c = params;
    c["type"] = kind;
    MapModel m;
    m.kind_ = kind == "interval" ? MapKind::Interval : MapKind::Ball;
    m.pieces_.push_back({std::nullopt, CloudConstructor::from_json(c, domain_dim)});
    m.image_dim_ = m.pieces_.front().cloud.image_dim();
    return m;
  }
  if (kind == "piecewise") {
    const json& pieces = field(params, "pieces", "map.parameters");
    if (!pieces.is_array() || pieces.empty()) schema_error("map.parameters.pieces", "expected a nonempty array");
    std::vector<MapPiece> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string where = "map.parameters.pieces[" + std::to_string(i) + "]";
      MapPiece p{std::nullopt, CloudConstructor::from_json(field(pieces[i], "cloud", where), domain_dim)};
      if (pieces[i].contains("when")) p.when = Expr::parse(text(pieces[i]["when"], where + ".when"), vars);
      out.push_back(std::move(p));
    }
    return piecewise(std::move(out));
  }
  schema_error("map.kind", "unknown map kind '" + kind + "'");
}

json MapModel::to_json() const {
  json params;
  switch (kind_) {
    case MapKind::Table: {
      json clouds = json::array();
      for (const auto& c : table_) clouds.push_back(points_to_json(c->points));
      params = {{"clouds", clouds}};
      break;
    }
    case MapKind::Constant:
      params = {{"cloud", pieces_.front().cloud.to_json()}};
      break;
    case MapKind::Interval:
    case MapKind::Ball:
      params = pieces_.front().cloud.to_json();
      params.erase("type");
      break;
    case MapKind::Piecewise: {
      json arr = json::array();
      for (const auto& p : pieces_) {
        json pj = {{"cloud", p.cloud.to_json()}};
        if (p.when) pj["when"] = p.when->source();
        arr.push_back(pj);
      }
      params = {{"pieces", arr}};
      break;
    }
  }
  return {{"kind", to_string(kind_)}, {"parameters", params}};
}

CloudPtr MapModel::evaluate_analytic(std::span<const double> x) const {
  if (!is_analytic()) throw ValidationError("table maps can only be evaluated at grid points");
  for (const auto& p : pieces_) {
    if (!p.when || p.when->eval(x) != 0.0) return p.cloud.build(x);
  }
  std::string at;
  for (double v : x) at += (at.empty() ? "" : ",") + std::to_string(v);
  throw ValidationError("no region matches x=(" + at + ")");
}

}  // namespace setopt
