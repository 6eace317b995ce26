#include "setopt/cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace setopt {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void require_dim(std::span<const double> v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw ValidationError(std::string("dimension mismatch: ") + what + " has dimension " +
                          std::to_string(v.size()) + ", expected " + std::to_string(expected));
  }
}

Cone::Cone(std::vector<Vec> dual_generators, Vec order_unit, double tol)
    : generators_(std::move(dual_generators)), order_unit_(std::move(order_unit)), tol_(tol) {
  if (order_unit_.empty()) throw ValidationError("cone: order unit must have positive dimension");
  if (generators_.empty()) throw ValidationError("cone: at least one dual generator is required");
  if (!(tol_ > 0.0) || !std::isfinite(tol_)) throw ValidationError("cone: tolerance must be positive");
  for (double v : order_unit_) {
    if (!std::isfinite(v)) throw ValidationError("cone: order unit entries must be finite");
  }
  unit_weights_.reserve(generators_.size());
  for (const auto& w : generators_) {
    require_dim(w, dim(), "dual generator");
    bool nonzero = false;
    for (double v : w) {
      if (!std::isfinite(v)) throw ValidationError("cone: dual generator entries must be finite");
      nonzero = nonzero || v != 0.0;
    }
    if (!nonzero) throw ValidationError("cone: dual generator is zero");
    const double wq = dot(w, order_unit_);
    if (!(wq > 0.0)) throw ValidationError("order unit not interior");
    unit_weights_.push_back(wq);
  }
}

Cone Cone::orthant(Vec order_unit, double tol) {
  std::vector<Vec> gens(order_unit.size(), Vec(order_unit.size(), 0.0));
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i][i] = 1.0;
  return Cone(std::move(gens), std::move(order_unit), tol);
}

Cone Cone::with_order_unit(Vec order_unit) const { return Cone(generators_, std::move(order_unit), tol_); }

bool Cone::contains(std::span<const double> y) const {
  require_dim(y, dim(), "point");
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Vec& w) { return dot(w, y) >= -tol_; });
}

bool Cone::contains_interior(std::span<const double> y) const {
  require_dim(y, dim(), "point");
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Vec& w) { return dot(w, y) > tol_; });
}

ScalarValue Cone::gerstewitz(std::span<const double> y) const {
  require_dim(y, dim(), "point");
  double best = kInfinity;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    best = std::min(best, dot(generators_[j], y) / unit_weights_[j]);
  }
  return best;
}

ScalarValue gerstewitz_oracle(const Cone& cone, std::span<const double> y, double tol) {
  require_dim(y, cone.dim(), "point");
  if (!(tol > 0.0)) throw ValidationError("oracle tolerance must be positive");
  const Vec& q = cone.order_unit();
  Vec shifted(y.size());
  auto member = [&](double t) {
    for (std::size_t i = 0; i < y.size(); ++i) shifted[i] = y[i] - t * q[i];
    for (const auto& w : cone.dual_generators()) {
      if (dot(w, shifted) < 0.0) return false;
    }
    return true;
  };

  double lo = 0.0;
  double hi = 0.0;
  if (member(0.0)) {
    hi = 1.0;
    while (member(hi)) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) return kInfinity;
    }
  } else {
    lo = -1.0;
    while (!member(lo)) {
      hi = lo;
      lo *= 2.0;
      if (!std::isfinite(lo)) return -kInfinity;
    }
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (member(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace setopt
