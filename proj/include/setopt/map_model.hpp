#ifndef SETOPT_MAP_MODEL_HPP
#define SETOPT_MAP_MODEL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "setopt/expr.hpp"
#include "setopt/setrel.hpp"

namespace setopt {

using CloudPtr = std::shared_ptr<const PointCloud>;

/// Builds the cloud F(x) for one region of a map. Constructors that do not
/// depend on x hand out one shared cloud.
class CloudConstructor {
 public:
  struct Points {};
  struct Point {
    std::vector<Expr> coords;
  };
  /// One-dimensional image [lower(x), upper(x)], `samples` evenly spaced points.
  struct Interval {
    Expr lower;
    Expr upper;
    std::size_t samples;
  };
  /// center(x) + radius * B sampled on a fixed angular lattice of `samples`
  /// angles 2*pi*k/samples; quarter turns are placed exactly.
  struct Ball {
    std::vector<Expr> center;
    double radius;
    std::size_t samples;
  };
  struct Box {
    Vec lower;
    Vec upper;
    std::vector<std::size_t> resolution;
  };
  enum class Spacing { Linear, Log };
  /// Curve t -> coords(t) for t on a linear or logarithmic grid.
  struct Parametric {
    std::vector<Expr> coords;
    Spacing spacing;
    double lower;
    double upper;
    std::size_t count;
  };
  using Shape = std::variant<Points, Point, Interval, Ball, Box, Parametric>;

  static CloudConstructor fixed(PointCloud cloud);
  static CloudConstructor from_json(const nlohmann::json& doc, std::size_t domain_dim);
  nlohmann::json to_json() const;

  CloudPtr build(std::span<const double> x) const;
  std::size_t image_dim() const { return image_dim_; }

 private:
  Shape shape_;
  std::optional<std::string> note_;
  CloudPtr fixed_;
  std::size_t image_dim_ = 0;
};

enum class MapKind { Table, Interval, Ball, Piecewise, Constant };

const char* to_string(MapKind kind);

struct MapPiece {
  /// Region predicate; absent means "everywhere". First matching piece wins.
  std::optional<Expr> when;
  CloudConstructor cloud;
};

/// The set-valued map F. Table maps list one cloud per grid point (in grid
/// order); every other kind is analytic and can be evaluated anywhere.
class MapModel {
 public:
  static MapModel table(std::vector<PointCloud> clouds);
  static MapModel constant(PointCloud cloud);
  static MapModel piecewise(std::vector<MapPiece> pieces);
  static MapModel from_json(const nlohmann::json& doc, std::size_t domain_dim);
  nlohmann::json to_json() const;

  MapKind kind() const { return kind_; }
  bool is_analytic() const { return kind_ != MapKind::Table; }
  std::size_t image_dim() const { return image_dim_; }

  /// Analytic kinds only. Throws ValidationError if no region matches x or
  /// an interval is reversed at x.
  CloudPtr evaluate_analytic(std::span<const double> x) const;
  const std::vector<CloudPtr>& table_clouds() const { return table_; }

 private:
  MapKind kind_ = MapKind::Piecewise;
  std::vector<MapPiece> pieces_;
  std::vector<CloudPtr> table_;
  std::size_t image_dim_ = 0;
};

}  // namespace setopt

#endif
