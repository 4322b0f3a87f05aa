#pragma once

// Brute-force reference computations. Each one works from the definitions
// (faces looked up by vertex set, full enumeration of cochains or subsets)
// and shares no search code with the main algorithms, so agreement between
// the two is evidence that both are right.

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/overlap.hpp"
#include "hdx/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hdx::oracle {

/// δα computed face by face from vertex deletions.
BitVec coboundary(const SimplicialComplex& x, int i, const BitVec& alpha);

struct CosetMin {
  std::int64_t weight = 0;
  BitVec argmin;
};

/// Plain binary enumeration of all 2^k combinations, lexicographic tie-break.
CosetMin min_weight_in_coset(const BitVec& target, std::span<const BitVec> basis, std::span<const std::int64_t> weights);

struct Expansion {
  std::optional<Rational> epsilon;
  std::optional<Rational> epsilon_tilde;
  std::optional<Rational> mu;
  int dim_b = 0;
  int dim_z = 0;
  int dim_h() const { return dim_z - dim_b; }
  /// Minimum norm over Z^i \ B^i.
  std::optional<Rational> systole;
};

/// Enumerates all 2^|X(i)| cochains. Throws TooLarge when |X(i)| > 24 or |X(i+1)| > 64.
Expansion expansion(const SimplicialComplex& x, int i);

/// Cheeger constant by scanning every subset mask directly.
struct Cheeger {
  Rational h;
  std::vector<std::size_t> witness;
};
Cheeger cheeger(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Local minimality by enumerating every (i-2)-cochain of every vertex link,
/// with link faces and weights computed from X directly.
bool locally_minimal(const SimplicialComplex& x, int i, const BitVec& alpha);

/// Maximum number of closed intervals sharing a point.
std::int64_t interval_stabbing(const std::vector<std::pair<Rational, Rational>>& intervals);

/// Planar overlap depth maximised over a 400x400 grid on the bounding box of
/// the vertex images, every vertex image and edge crossing (found by
/// parametric solves), and small perturbations of those points. Containment
/// uses barycentric signs in scaled integer arithmetic.
std::int64_t planar_overlap(const SimplicialComplex& x, const PointConfig& p);

}  // namespace hdx::oracle
