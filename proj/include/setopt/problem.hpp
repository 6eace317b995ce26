#ifndef SETOPT_PROBLEM_HPP
#define SETOPT_PROBLEM_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "setopt/cone.hpp"
#include "setopt/map_model.hpp"

namespace setopt {

inline constexpr const char* kSchemaVersion = "1";

/// Axis-aligned sampling box: `resolution[a]` evenly spaced values on
/// [lower[a], upper[a]] per axis.
struct GridBox {
  Vec lower;
  Vec upper;
  std::vector<std::size_t> resolution;

  Vec step() const;
};

/// Finite sample of the domain X, a subset of R^n.
class DomainGrid {
 public:
  static DomainGrid from_points(std::vector<Vec> points);
  /// Points in lexicographic order, first axis outermost.
  static DomainGrid from_box(GridBox box);

  std::size_t dim() const { return points_.front().size(); }
  std::size_t size() const { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }
  const std::optional<GridBox>& box() const { return box_; }

  std::optional<std::size_t> find(std::span<const double> x) const;
  std::size_t nearest(std::span<const double> x) const;
  double max_norm() const;
  /// Smallest box step, or the smallest pairwise distance without a box.
  double spacing() const;

 private:
  std::vector<Vec> points_;
  std::optional<GridBox> box_;
  std::map<Vec, std::size_t> index_;
};

struct Tolerances {
  double cone_tol = kDefaultConeTol;
  /// Bracket width for the bisection oracle.
  double scal_tol = 1e-9;
  /// Decides ties Psi_F(x) = lambda in colevel sets and argmin.
  double tie_tol = 1e-9;
};

struct AssertedFlags {
  /// Condition (K_q^set) of the noncoercive existence theorem, asserted by the user.
  bool k_q_set = false;
};

/// Result of evaluating F off the grid. Table maps snap to the nearest grid
/// point and report how far they moved.
struct RayEvaluation {
  CloudPtr cloud;
  double snap_distance = 0.0;
};

/// A set optimization instance: min F(x) over the grid, ordered by the cone.
/// Immutable after construction; every grid value is materialized eagerly.
class Problem {
 public:
  Problem(DomainGrid grid, MapModel map, const Cone& cone, Tolerances tolerances = {},
          AssertedFlags flags = {});

  const DomainGrid& grid() const { return grid_; }
  const MapModel& map() const { return map_; }
  const Cone& cone() const { return cone_; }
  const Tolerances& tolerances() const { return tol_; }
  const AssertedFlags& flags() const { return flags_; }
  std::size_t size() const { return grid_.size(); }

  const PointCloud& cloud(std::size_t i) const { return *clouds_[i]; }
  /// F(x) for a grid point; throws ValidationError otherwise.
  const PointCloud& evaluate(std::span<const double> x) const;
  std::size_t index_of(std::span<const double> x) const;
  RayEvaluation evaluate_at(std::span<const double> x) const;

  /// Same map and cone on the grid points with norm <= radius (box dropped).
  Problem restricted_to_ball(double radius) const;

 private:
  DomainGrid grid_;
  MapModel map_;
  Cone cone_;
  Tolerances tol_;
  AssertedFlags flags_;
  std::vector<CloudPtr> clouds_;
};

Problem build_problem(const nlohmann::json& doc);
Problem load_problem(const std::string& path);
nlohmann::json to_document(const Problem& problem);

}  // namespace setopt

#endif
