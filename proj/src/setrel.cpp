#include "setopt/setrel.hpp"

#include <algorithm>
#include <numeric>

namespace setopt {

PointCloud make_cloud(std::vector<Vec> points, std::optional<std::string> note) {
  if (points.empty()) throw ValidationError("point cloud must be nonempty");
  const std::size_t m = points.front().size();
  if (m == 0) throw ValidationError("point cloud points must have positive dimension");
  for (const auto& p : points) require_dim(p, m, "cloud point");
  return PointCloud{std::move(points), std::move(note)};
}

namespace {

template <typename Pred>
bool dominated_by(const std::vector<Vec>& a, const std::vector<Vec>& b, const Cone& cone, Pred in_cone) {
  if (a.front().size() != cone.dim() || b.front().size() != cone.dim()) {
    throw ValidationError("dimension mismatch: cloud and cone dimensions differ");
  }
  Vec diff(cone.dim());
  for (const auto& bp : b) {
    bool witnessed = false;
    for (const auto& ap : a) {
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = bp[i] - ap[i];
      if (in_cone(diff)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace

bool lower_less(const PointCloud& a, const PointCloud& b, const Cone& cone) {
  return dominated_by(a.points, b.points, cone, [&](const Vec& d) { return cone.contains(d); });
}

bool strictly_lower_less(const PointCloud& a, const PointCloud& b, const Cone& cone) {
  return dominated_by(a.points, b.points, cone, [&](const Vec& d) { return cone.contains_interior(d); });
}

bool equivalent_l(const PointCloud& a, const PointCloud& b, const Cone& cone) {
  return lower_less(a, b, cone) && lower_less(b, a, cone);
}

PreparedCloud::PreparedCloud(const PointCloud& cloud, const Cone& cone) {
  std::vector<double> key(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) key[i] = cone.gerstewitz(cloud.points[i]);
  std::vector<std::size_t> order(cloud.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) { return key[l] < key[r]; });
  points_.reserve(order.size());
  for (auto i : order) points_.push_back(cloud.points[i]);
}

bool lower_less(const PreparedCloud& a, const PreparedCloud& b, const Cone& cone) {
  return dominated_by(a.points(), b.points(), cone, [&](const Vec& d) { return cone.contains(d); });
}

bool strictly_lower_less(const PreparedCloud& a, const PreparedCloud& b, const Cone& cone) {
  return dominated_by(a.points(), b.points(), cone,
                      [&](const Vec& d) { return cone.contains_interior(d); });
}

}  // namespace setopt
