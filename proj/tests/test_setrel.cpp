#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace setopt;

namespace {

std::vector<Vec> random_cloud(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<Vec> out(static_cast<std::size_t>(size(rng)), Vec(dim));
  for (auto& p : out) {
    for (double& v : p) v = coord(rng);
  }
  return out;
}

}  // namespace

TEST_CASE("clouds must be nonempty and of one dimension") {
  CHECK_THROWS_AS(make_cloud({}), ValidationError);
  CHECK_THROWS_AS(make_cloud({{1.0, 2.0}, {1.0}}), ValidationError);
  const Cone cone = Cone::orthant({1.0, 1.0});
  CHECK_THROWS_AS(lower_less(make_cloud({{1.0}}), make_cloud({{1.0}}), cone), ValidationError);
}

TEST_CASE("relations agree with the quantifier definitions") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    auto tc = support::random_cone(rng);
    // Integer coordinates need a rational order unit for boundary cases to occur.
    for (double& v : tc.q) v = std::round(v) + 1.0;
    if (tc.kind == support::ConeKind::Wedge) tc.q = {2.0, 1.0};
    const Cone cone = tc.cone();
    const auto a = random_cloud(rng, tc.q.size());
    const auto b = random_cloud(rng, tc.q.size());
    const PointCloud ca = make_cloud(a);
    const PointCloud cb = make_cloud(b);
    const bool weak = support::brute_lower_less(a, b, tc, false);
    const bool strict = support::brute_lower_less(a, b, tc, true);
    CHECK(lower_less(ca, cb, cone) == weak);
    CHECK(strictly_lower_less(ca, cb, cone) == strict);
    const PreparedCloud pa(ca, cone);
    const PreparedCloud pb(cb, cone);
    CHECK(lower_less(pa, pb, cone) == weak);
    CHECK(strictly_lower_less(pa, pb, cone) == strict);
    CHECK(equivalent_l(ca, cb, cone) == (weak && support::brute_lower_less(b, a, tc, false)));
  }
}

TEST_CASE("lower set-less is a preorder and strict implies weak") {
  std::mt19937_64 rng(6);
  const support::TestCone tc{support::ConeKind::Orthant2, {1.0, 1.0}};
  const Cone cone = tc.cone();
  for (int k = 0; k < 500; ++k) {
    const PointCloud a = make_cloud(random_cloud(rng, 2));
    const PointCloud b = make_cloud(random_cloud(rng, 2));
    const PointCloud c = make_cloud(random_cloud(rng, 2));
    CHECK(lower_less(a, a, cone));
    CHECK_FALSE(strictly_lower_less(a, a, cone));
    if (lower_less(a, b, cone) && lower_less(b, c, cone)) CHECK(lower_less(a, c, cone));
    if (strictly_lower_less(a, b, cone)) CHECK(lower_less(a, b, cone));
  }
}
