#ifndef SETOPT_TESTS_SUPPORT_HPP
#define SETOPT_TESTS_SUPPORT_HPP

// Oracles that avoid the library's dual-generator arithmetic: cones are
// described by their primal inequalities, relations by direct quantifiers.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/fixtures.hpp"
#include "setopt/problem.hpp"
#include "setopt/setrel.hpp"

namespace support {

using setopt::Vec;

enum class ConeKind { Orthant2, Orthant3, Wedge };

struct TestCone {
  ConeKind kind;
  Vec q;

  setopt::Cone cone() const {
    if (kind == ConeKind::Wedge) return setopt::Cone({{1.0, 1.0}, {1.0, -1.0}}, q);
    return setopt::Cone::orthant(q);
  }

  // Wedge: {(a, b) : |b| <= a}.
  bool in_cone(const Vec& y) const {
    if (kind == ConeKind::Wedge) return std::abs(y[1]) <= y[0];
    return std::all_of(y.begin(), y.end(), [](double v) { return v >= 0.0; });
  }
  bool in_interior(const Vec& y) const {
    if (kind == ConeKind::Wedge) return std::abs(y[1]) < y[0];
    return std::all_of(y.begin(), y.end(), [](double v) { return v > 0.0; });
  }
};

inline TestCone random_cone(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> pos(0.1, 5.0);
  std::uniform_real_distribution<double> tilt(-0.9, 0.9);
  switch (kind(rng)) {
    case 0: return {ConeKind::Orthant2, {pos(rng), pos(rng)}};
    case 1: return {ConeKind::Orthant3, {pos(rng), pos(rng), pos(rng)}};
    default: {
      const double a = pos(rng);
      return {ConeKind::Wedge, {a, a * tilt(rng)}};
    }
  }
}

inline Vec shifted(const Vec& y, const Vec& q, double t) {
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] - t * q[i];
  return out;
}

/// sup{t : y - t q in P} by bisection on the primal description.
inline double bisect_psi(const TestCone& c, const Vec& y) {
  double lo = -1.0;
  double hi = 1.0;
  while (!c.in_cone(shifted(y, c.q, lo))) lo *= 2.0;
  while (c.in_cone(shifted(y, c.q, hi))) hi *= 2.0;
  for (int k = 0; k < 200 && hi - lo > 1e-13; ++k) {
    const double mid = 0.5 * (lo + hi);
    (c.in_cone(shifted(y, c.q, mid)) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// A <=^l B (strict: A <^l B) straight from the definition.
inline bool brute_lower_less(const std::vector<Vec>& a, const std::vector<Vec>& b, const TestCone& c, bool strict) {
  for (const auto& y : b) {
    bool found = false;
    for (const auto& x : a) {
      Vec d(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) d[i] = y[i] - x[i];
      if (strict ? c.in_interior(d) : c.in_cone(d)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline setopt::Problem fixture(const std::string& name) {
  for (auto& [stem, doc] : setopt::fixtures::all()) {
    if (stem == name) return setopt::build_problem(doc);
  }
  throw std::runtime_error("no fixture " + name);
}

/// Strictly weakly efficient points straight from the definition.
inline std::vector<std::size_t> brute_sweff(const setopt::Problem& p, const TestCone& tc) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    bool dominated = false;
    for (std::size_t a = 0; a < p.size() && !dominated; ++a) {
      dominated = a != b && brute_lower_less(p.cloud(a).points, p.cloud(b).points, tc, true);
    }
    if (!dominated) out.push_back(b);
  }
  return out;
}

/// Primal description of a problem's cone: orthant, or the wedge {|y2| <= y1}.
inline TestCone primal_of(const setopt::Problem& p) {
  const auto& gens = p.cone().dual_generators();
  const bool wedge = gens.size() == 2 && gens[1] == Vec{1.0, -1.0};
  return {wedge ? ConeKind::Wedge : ConeKind::Orthant2, p.cone().order_unit()};
}

}  // namespace support

#endif
