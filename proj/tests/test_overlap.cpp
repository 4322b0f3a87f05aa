#include "support.hpp"

#include "hdx/generators.hpp"
#include "hdx/oracles.hpp"
#include "hdx/overlap.hpp"

#include <doctest.h>

#include <random>

using namespace hdx;
using namespace hdx::test;

namespace {

PointConfig plane(std::initializer_list<std::pair<const char*, std::pair<long, long>>> pts) {
  PointConfig p{2, {}};
  for (const auto& [label, xy] : pts) p.coords[label] = {Rational(xy.first), Rational(xy.second)};
  return p;
}

}  // namespace

TEST_CASE("single triangle") {
  const auto x = build({{"a", "b", "c"}});
  const auto r = geometric_overlap_2d(x, plane({{"a", {0, 0}}, {"b", {4, 0}}, {"c", {0, 4}}}));
  CHECK(r.max_depth == 1);
  CHECK(r.fraction == 1);
}

TEST_CASE("convex quadrilateral") {
  const auto x = complete_complex(4, 2);
  const auto r = geometric_overlap_2d(x, plane({{"0", {0, 0}}, {"1", {1, 0}}, {"2", {1, 1}}, {"3", {0, 1}}}));
  CHECK(r.max_depth == 4);
  CHECK(r.fraction == 1);
  CHECK(r.witness == std::vector<Rational>{q("1/2"), q("1/2")});
  CHECK(r.covering_facets.size() == 4);
}

TEST_CASE("boundary points count as covered") {
  // two triangles sharing the edge bc: the shared edge lies in both closed triangles
  const auto x = build({{"a", "b", "c"}, {"b", "c", "d"}});
  const auto r = geometric_overlap_2d(x, plane({{"a", {0, 0}}, {"b", {2, -1}}, {"c", {2, 1}}, {"d", {4, 0}}}));
  CHECK(r.max_depth == 2);
}

TEST_CASE("degenerate images") {
  const auto x = complete_complex(4, 2);
  const auto r = geometric_overlap_2d(x, plane({{"0", {0, 0}}, {"1", {3, 0}}, {"2", {1, 0}}, {"3", {7, 0}}}));
  // intervals [0,3], [0,7], [0,7], [1,7]: all contain [1,3]
  CHECK(r.max_depth == 4);
  CHECK(oracle::interval_stabbing({{q("0"), q("1")}, {q("2"), q("3")}, {q("1"), q("2")}}) == 2);
}

TEST_CASE("errors") {
  const auto tri = build({{"a", "b", "c"}});
  CHECK(error_of([&] { geometric_overlap_2d(tri, plane({{"a", {0, 0}}, {"b", {1, 0}}})); }) == ErrorCode::BadParams);
  CHECK(error_of([] { geometric_overlap_2d(fixture("cycle_4"), plane({})); }) == ErrorCode::WrongDimension);
  CHECK(error_of([&] { geometric_overlap_mc(tri, plane({{"a", {0, 0}}, {"b", {1, 0}}, {"c", {0, 1}}}), 0, 1); }) ==
        ErrorCode::BadParams);
}

TEST_CASE("exact depth matches the grid oracle; Monte Carlo never exceeds it") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const auto x = complete_complex(n, 2);
    PointConfig p{2, {}};
    for (int v = 0; v < n; ++v)
      p.coords[std::to_string(v)] = {Rational(static_cast<long>(rng() % 9)), Rational(static_cast<long>(rng() % 9))};
    const auto exact = geometric_overlap_2d(x, p);
    CHECK(exact.max_depth == oracle::planar_overlap(x, p));
    const auto mc = geometric_overlap_mc(x, p, 40, t);
    CHECK(mc.best.max_depth <= exact.max_depth);
    CHECK(mc.wilson_low <= mc.wilson_high);
  }
}

TEST_CASE("monte carlo is reproducible and works in higher dimension") {
  const auto x = complete_complex(6, 2);
  PointConfig p{2, {}};
  for (int v = 0; v < 6; ++v) p.coords[std::to_string(v)] = {Rational(v * v % 7), Rational(v * 3 % 5)};
  const auto a = geometric_overlap_mc(x, p, 200, 99);
  const auto b = geometric_overlap_mc(x, p, 200, 99);
  CHECK(a.best.max_depth == b.best.max_depth);
  CHECK(a.best.witness == b.best.witness);
  CHECK(a.hits == b.hits);

  const auto tet = complete_complex(4, 3);
  PointConfig p3{3, {}};
  p3.coords["0"] = {0, 0, 0};
  p3.coords["1"] = {1, 0, 0};
  p3.coords["2"] = {0, 1, 0};
  p3.coords["3"] = {0, 0, 1};
  const auto r = geometric_overlap_mc(tet, p3, 5, 1);
  CHECK(r.best.fraction == 1);
}

TEST_CASE("convex hull membership") {
  const std::vector<std::vector<Rational>> tri{{0, 0}, {2, 0}, {0, 2}};
  CHECK(in_convex_hull(tri, {1, 1}));
  CHECK(in_convex_hull(tri, {0, 0}));
  CHECK_FALSE(in_convex_hull(tri, {q("3/2"), q("3/4")}));
}
