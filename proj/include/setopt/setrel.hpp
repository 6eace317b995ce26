#ifndef SETOPT_SETREL_HPP
#define SETOPT_SETREL_HPP

#include <optional>
#include <string>
#include <vector>

#include "setopt/cone.hpp"

namespace setopt {

/// Finite, nonempty set of image-space points standing for one value F(x).
struct PointCloud {
  std::vector<Vec> points;
  /// Which analytic set this cloud samples and how densely, if any.
  std::optional<std::string> sampling_note;

  std::size_t dim() const { return points.front().size(); }
  std::size_t size() const { return points.size(); }
};

/// Validates nonemptiness and a common dimension.
PointCloud make_cloud(std::vector<Vec> points, std::optional<std::string> note = std::nullopt);

// Lower set-less relations. A <=^l B iff B is a subset of A + P; the strict
// version uses int P instead. Exact predicates over the finite clouds.
bool lower_less(const PointCloud& a, const PointCloud& b, const Cone& cone);
bool strictly_lower_less(const PointCloud& a, const PointCloud& b, const Cone& cone);
bool equivalent_l(const PointCloud& a, const PointCloud& b, const Cone& cone);

/// A cloud with its points ordered by ascending scalarization value. The
/// relation predicates on prepared clouds return exactly what the plain ones
/// do; the ordering only makes witnesses (and counterexamples) show up early.
class PreparedCloud {
 public:
  PreparedCloud(const PointCloud& cloud, const Cone& cone);
  const std::vector<Vec>& points() const { return points_; }

 private:
  std::vector<Vec> points_;
};

bool lower_less(const PreparedCloud& a, const PreparedCloud& b, const Cone& cone);
bool strictly_lower_less(const PreparedCloud& a, const PreparedCloud& b, const Cone& cone);

}  // namespace setopt

#endif
