#pragma once

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hdx {

/// Vertex label -> exact coordinates in R^dim.
struct PointConfig {
  int dim = 0;
  std::map<std::string, std::vector<Rational>> coords;
};

/// Coordinates of every vertex of x, in vertex-index order. Throws BadParams
/// when a vertex is missing or a coordinate vector has the wrong length.
std::vector<std::vector<Rational>> vertex_images(const SimplicialComplex& x, const PointConfig& p);

struct OverlapResult {
  std::int64_t max_depth = 0;
  /// max_depth / |X(d)|
  Rational fraction;
  std::vector<Rational> witness;
  /// Facet indices whose closed image contains the witness.
  std::vector<std::size_t> covering_facets;
  std::size_t candidates = 0;
};

/// Exact maximum number of closed facet images through one point of R².
/// Candidates are the vertex images and all pairwise intersections of edge
/// images; the witness is the lexicographically least deepest candidate.
/// Throws WrongDimension unless dim X = 2 and the points are planar.
OverlapResult geometric_overlap_2d(const SimplicialComplex& x, const PointConfig& p);

/// Closed-simplex containment: is `point` in the convex hull of `vertices`?
bool in_convex_hull(const std::vector<std::vector<Rational>>& vertices, const std::vector<Rational>& point);

struct MonteCarloOverlap {
  OverlapResult best;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Random samples reaching best.max_depth.
  std::size_t hits = 0;
  /// 95% Wilson interval for hits / samples.
  double wilson_low = 0;
  double wilson_high = 0;
};

/// Lower bound on the maximum depth from the vertex images plus `samples`
/// random convex combinations of facet vertices (integer weights 1..1000),
/// reproducible from `seed`. Throws BadParams for samples < 1 or dim < 2.
MonteCarloOverlap geometric_overlap_mc(const SimplicialComplex& x, const PointConfig& p, std::size_t samples,
                                       std::uint64_t seed);

}  // namespace hdx
