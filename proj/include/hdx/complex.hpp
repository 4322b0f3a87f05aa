#pragma once

#include "hdx/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdx {

/// Sorted tuple of dense vertex indices.
using Face = std::vector<int>;

/// Finite pure simplicial complex, immutable after construction.
///
/// Faces of every dimension -1..dim() are stored sorted; X(-1) = {∅}. Face
/// indices are positions in those sorted lists and never change. Vertex
/// labels are opaque strings; vertex i has label labels()[i].
class SimplicialComplex {
 public:
  /// Downward closure of equal-cardinality facets. Vertices are indexed in
  /// order of first appearance.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

  /// Same, for facets already given as indices into `labels`. Labels that no
  /// facet uses are dropped and the rest re-indexed in their original order.
  /// A single empty facet yields the (-1)-dimensional complex {∅}.
  static SimplicialComplex from_index_facets(const std::vector<std::string>& labels,
                                             const std::vector<Face>& facets);

  int dim() const noexcept { return dim_; }
  std::size_t num_vertices() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool has_dim(int i) const noexcept { return i >= -1 && i <= dim_; }
  /// Faces of dimension i (each of size i+1). Empty span outside -1..dim().
  std::span<const Face> faces(int i) const noexcept;
  std::size_t count(int i) const noexcept { return faces(i).size(); }
  std::span<const Face> facets() const noexcept { return faces(dim_); }

  std::optional<std::size_t> index_of(const Face& face) const;
  std::optional<int> vertex_index(const std::string& label) const;

  /// Codimension-one subfaces (indices into X(i-1)) of face `idx` of X(i), i >= 0.
  std::span<const std::size_t> subfaces(int i, std::size_t idx) const;
  /// Faces of X(i+1) containing face `idx` of X(i).
  std::span<const std::size_t> cofaces(int i, std::size_t idx) const;

  /// c(σ): number of facets containing the face.
  std::int64_t facet_degree(int i, std::size_t idx) const { return facet_degree_[i + 1][idx]; }
  std::span<const std::int64_t> facet_degrees(int i) const { return facet_degree_[i + 1]; }

  /// C(d+1, i+1) * |X(d)|, the common denominator of all weights in X(i).
  std::int64_t weight_denominator(int i) const;
  Rational weight(int i, std::size_t idx) const;

  std::vector<std::string> face_labels(const Face& face) const;
  /// Facets as label lists, in canonical order (labels sorted within a
  /// facet, facets sorted lexicographically).
  std::vector<std::vector<std::string>> canonical_facets() const;

  /// Pure k-skeleton: the complex whose facets are X(k).
  SimplicialComplex skeleton(int k) const;

 private:
  SimplicialComplex() = default;

  std::vector<std::string> labels_;
  int dim_ = -1;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::map<Face, std::size_t>> index_;
  std::vector<std::vector<std::int64_t>> facet_degree_;
  std::vector<std::vector<std::vector<std::size_t>>> subfaces_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

/// Link of a face together with the correspondence ρ ↦ ρ ∪ τ.
struct Link {
  SimplicialComplex complex;
  /// to_parent[k + 1][j]: index in X(k + |τ|) of (link face j of dim k) ∪ τ.
  std::vector<std::vector<std::size_t>> to_parent;
  /// Parent vertex index of each link vertex.
  std::vector<int> parent_vertex;
};

/// Throws FaceNotPresent when τ is not a face of X.
Link link(const SimplicialComplex& x, const Face& tau);

struct FaceWeight {
  std::int64_t facet_degree;
  Rational weight;
};
/// Throws DimensionOutOfRange unless -1 <= i <= dim.
std::vector<FaceWeight> weight_profile(const SimplicialComplex& x, int i);

/// Isomorphism of complexes (vertex bijection mapping facets onto facets).
/// Backtracking with degree pruning; intended for desk-scale inputs.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

std::int64_t binomial(int n, int k);

}  // namespace hdx
