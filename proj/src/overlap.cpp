#include "hdx/overlap.hpp"

#include "hdx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>

namespace hdx {

std::vector<std::vector<Rational>> vertex_images(const SimplicialComplex& x, const PointConfig& p) {
  std::vector<std::vector<Rational>> out;
  out.reserve(x.num_vertices());
  for (const auto& label : x.labels()) {
    auto it = p.coords.find(label);
    if (it == p.coords.end()) throw Error(ErrorCode::BadParams, "no coordinates for vertex " + label);
    if (static_cast<int>(it->second.size()) != p.dim)
      throw Error(ErrorCode::BadParams, "vertex " + label + " has " + std::to_string(it->second.size()) +
                                            " coordinates, expected " + std::to_string(p.dim));
    out.push_back(it->second);
  }
  return out;
}

namespace {

using Pt = std::pair<Rational, Rational>;

int orient(const Pt& a, const Pt& b, const Pt& c) {
  const Rational det = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
  return sgn(det);
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

bool in_closed_triangle(const Pt& a, const Pt& b, const Pt& c, const Pt& p) {
  if (orient(a, b, c) == 0) return on_segment(a, b, p) || on_segment(b, c, p) || on_segment(a, c, p);
  const int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
  return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

// Single intersection point of two segments, if they meet in exactly one
// point that is not already an endpoint-collinear overlap.
std::optional<Pt> segment_crossing(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  const Rational rx = b.first - a.first, ry = b.second - a.second;
  const Rational sx = d.first - c.first, sy = d.second - c.second;
  const Rational den = rx * sy - ry * sx;
  if (sgn(den) == 0) return std::nullopt;  // parallel: overlaps end at input points
  const Rational qx = c.first - a.first, qy = c.second - a.second;
  const Rational t = (qx * sy - qy * sx) / den;
  const Rational u = (qx * ry - qy * rx) / den;
  if (sgn(t) < 0 || t > 1 || sgn(u) < 0 || u > 1) return std::nullopt;
  return Pt{a.first + t * rx, a.second + t * ry};
}

}  // namespace

OverlapResult geometric_overlap_2d(const SimplicialComplex& x, const PointConfig& p) {
  if (x.dim() != 2) throw Error(ErrorCode::WrongDimension, "planar overlap needs a 2-dimensional complex");
  if (p.dim != 2) throw Error(ErrorCode::WrongDimension, "planar overlap needs points in R^2");
  const auto images = vertex_images(x, p);
  std::vector<Pt> pts;
  for (const auto& c : images) pts.emplace_back(c[0], c[1]);

  std::set<Pt> candidates(pts.begin(), pts.end());
  const auto edges = x.faces(1);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (auto c = segment_crossing(pts[static_cast<std::size_t>(e[0])], pts[static_cast<std::size_t>(e[1])],
                                    pts[static_cast<std::size_t>(f[0])], pts[static_cast<std::size_t>(f[1])]))
        candidates.insert(*c);
    }

  OverlapResult best;
  best.candidates = candidates.size();
  const auto facets = x.facets();
  for (const auto& c : candidates) {  // ascending order, so the first maximum is lex-least
    std::vector<std::size_t> covering;
    for (std::size_t t = 0; t < facets.size(); ++t) {
      const auto& f = facets[t];
      if (in_closed_triangle(pts[static_cast<std::size_t>(f[0])], pts[static_cast<std::size_t>(f[1])],
                             pts[static_cast<std::size_t>(f[2])], c))
        covering.push_back(t);
    }
    if (static_cast<std::int64_t>(covering.size()) > best.max_depth) {
      best.max_depth = static_cast<std::int64_t>(covering.size());
      best.witness = {c.first, c.second};
      best.covering_facets = std::move(covering);
    }
  }
  best.fraction = make_rational(best.max_depth, static_cast<std::int64_t>(facets.size()));
  return best;
}

namespace {

// Solves Σ λ_j v_j = point, Σ λ_j = 1 for affinely independent v_j; returns
// the unique solution or nothing when inconsistent or dependent.
std::optional<std::vector<Rational>> barycentric(const std::vector<const std::vector<Rational>*>& vs,
                                                 const std::vector<Rational>& point) {
  const std::size_t dim = point.size();
  const std::size_t k = vs.size();
  std::vector<std::vector<Rational>> m(dim + 1, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t j = 0; j < k; ++j) m[r][j] = (*vs[j])[r];
    m[r][k] = point[r];
  }
  for (std::size_t j = 0; j < k; ++j) m[dim][j] = 1;
  m[dim][k] = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = row;
    while (piv <= dim && sgn(m[piv][col]) == 0) ++piv;
    if (piv > dim) return std::nullopt;  // dependent columns
    std::swap(m[piv], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r <= dim; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c <= k; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  for (std::size_t r = row; r <= dim; ++r)
    if (sgn(m[r][k]) != 0) return std::nullopt;
  std::vector<Rational> lambda(k);
  for (std::size_t j = 0; j < k; ++j) lambda[j] = m[j][k];
  return lambda;
}

}  // namespace

bool in_convex_hull(const std::vector<std::vector<Rational>>& vertices, const std::vector<Rational>& point) {
  const std::size_t k = vertices.size();
  if (k == 0) return false;
  if (k > 20) throw Error(ErrorCode::TooLarge, "hull test supports at most 20 vertices");
  // Carathéodory: the point lies in the hull iff it lies in the simplex of
  // some affinely independent subset.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<const std::vector<Rational>*> sub;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1u) sub.push_back(&vertices[j]);
    if (sub.size() > point.size() + 1) continue;
    auto lambda = barycentric(sub, point);
    if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return sgn(l) >= 0; }))
      return true;
  }
  return false;
}

MonteCarloOverlap geometric_overlap_mc(const SimplicialComplex& x, const PointConfig& p, std::size_t samples,
                                       std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::BadParams, "at least one sample is required");
  if (p.dim < 2) throw Error(ErrorCode::BadParams, "Monte Carlo overlap needs points in R^d with d >= 2");
  const auto images = vertex_images(x, p);
  const auto facets = x.facets();
  std::vector<std::vector<std::vector<Rational>>> hulls;
  for (const auto& f : facets) {
    std::vector<std::vector<Rational>> h;
    for (int v : f) h.push_back(images[static_cast<std::size_t>(v)]);
    hulls.push_back(std::move(h));
  }
  auto depth_at = [&](const std::vector<Rational>& pt, std::vector<std::size_t>* covering) {
    std::int64_t depth = 0;
    for (std::size_t t = 0; t < hulls.size(); ++t)
      if (in_convex_hull(hulls[t], pt)) {
        ++depth;
        if (covering) covering->push_back(t);
      }
    return depth;
  };

  MonteCarloOverlap out;
  out.samples = samples;
  out.seed = seed;
  std::optional<std::vector<Rational>> best_pt;
  auto consider = [&](const std::vector<Rational>& pt) {
    const auto d = depth_at(pt, nullptr);
    if (d > out.best.max_depth || (d == out.best.max_depth && best_pt && pt < *best_pt) || !best_pt) {
      out.best.max_depth = d;
      best_pt = pt;
    }
    return d;
  };
  for (const auto& img : images) consider(img);

  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> sample_depths;
  sample_depths.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& f = facets[static_cast<std::size_t>(rng() % facets.size())];
    std::vector<Rational> pt(static_cast<std::size_t>(p.dim));
    std::int64_t total = 0;
    for (int v : f) {
      const auto w = static_cast<std::int64_t>(rng() % 1000) + 1;
      total += w;
      for (std::size_t c = 0; c < pt.size(); ++c) pt[c] += Rational(static_cast<long>(w)) * images[static_cast<std::size_t>(v)][c];
    }
    for (auto& c : pt) c /= Rational(static_cast<long>(total));
    sample_depths.push_back(consider(pt));
  }
  out.best.witness = *best_pt;
  depth_at(out.best.witness, &out.best.covering_facets);
  out.best.fraction = make_rational(out.best.max_depth, static_cast<std::int64_t>(facets.size()));
  out.best.candidates = images.size() + samples;
  out.hits = static_cast<std::size_t>(
      std::count(sample_depths.begin(), sample_depths.end(), out.best.max_depth));

  const double z = 1.959963984540054;
  const double n = static_cast<double>(samples);
  const double phat = static_cast<double>(out.hits) / n;
  const double denom = 1 + z * z / n;
  const double centre = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  out.wilson_low = std::max(0.0, centre - half);
  out.wilson_high = std::min(1.0, centre + half);
  return out;
}

}  // namespace hdx
