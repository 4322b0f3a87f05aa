#pragma once

#include "hdx/bitvec.hpp"
#include "hdx/caps.hpp"
#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hdx {

/// Simple undirected graph: symmetric adjacency bit-rows, zero diagonal.
class GraphView {
 public:
  GraphView() = default;
  /// Throws BadParams on loops or out-of-range endpoints; duplicate edges collapse.
  static GraphView from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  /// 1-skeleton of a complex.
  static GraphView from_complex(const SimplicialComplex& x);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const BitVec& neighbours(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].get(v); }
  std::size_t degree(std::size_t v) const { return degree_[v]; }
  const std::vector<std::size_t>& degrees() const noexcept { return degree_; }

  std::optional<std::size_t> regular_degree() const;
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }

  /// |E(W, W̄)| for a vertex subset given as a bit mask over vertices.
  std::size_t cut_size(const BitVec& w) const;
  /// Number of edges with both endpoints in W.
  std::size_t internal_edges(const BitVec& w) const;

 private:
  std::vector<BitVec> adj_;
  std::vector<std::size_t> degree_;
  std::size_t edges_ = 0;
};

/// Tolerance below which a Laplacian eigenvalue counts as zero.
inline constexpr double kZeroEigenTolerance = 1e-8;

/// All adjacency eigenvalues, descending. Throws TooLarge above caps.spectrum_max_n.
std::vector<double> adjacency_spectrum(const GraphView& g, const SearchCaps& caps = {});
/// All Laplacian (D - A) eigenvalues, ascending.
std::vector<double> laplacian_spectrum(const GraphView& g, const SearchCaps& caps = {});
/// Smallest positive Laplacian eigenvalue λ₁; absent for graphs with < 2 vertices
/// or no edges.
std::optional<double> laplacian_gap(const GraphView& g, const SearchCaps& caps = {});

/// max ‖A v - λ v‖ / ‖v‖ over the computed eigenpairs (solver self-check).
double eigen_residual(const GraphView& g, const SearchCaps& caps = {});

struct CheegerResult {
  Rational h;
  /// Smaller side of an optimal cut, ascending vertex indices; lexicographically
  /// least among optimal cuts.
  std::vector<std::size_t> witness;
};

/// h(G) = min over nonempty proper W of |E(W, W̄)| / min(|W|, |W̄|), by full scan.
/// Throws TooLarge above caps.cheeger_max_n vertices, BadParams below 2.
CheegerResult cheeger_exact(const GraphView& g, const SearchCaps& caps = {});

struct AlonMilmanReport {
  std::size_t w_size = 0;
  std::size_t complement_size = 0;
  std::size_t cut = 0;
  double lambda1 = 0;
  /// |E(W,W̄)| >= |W||W̄|/|V| · λ₁
  double cut_rhs = 0;
  bool cut_bound_ok = false;
  /// h(G) >= λ₁/2
  Rational cheeger;
  bool cheeger_bound_ok = false;
  /// For k-regular G: E(W) = ½(k|W| − |E(W,W̄)|) and E(W) <= ½(k − |W̄|/|V| λ₁)|W|.
  std::optional<std::size_t> internal_edges;
  std::optional<Rational> internal_identity_rhs;
  bool internal_edge_identity_ok = false;
  std::optional<double> internal_bound_rhs;
  bool internal_bound_ok = false;
};

inline constexpr double kSpectralTolerance = 1e-9;

/// Evaluates the three Alon–Milman items for one subset. `lambda1` and
/// `cheeger` may be supplied to avoid recomputation over many subsets.
/// Throws InvalidSubset unless W is a nonempty proper subset, Disconnected
/// for disconnected G.
AlonMilmanReport alon_milman_report(const GraphView& g, const BitVec& w, std::optional<double> lambda1 = {},
                                    std::optional<Rational> cheeger = {}, const SearchCaps& caps = {});

struct RamanujanResult {
  bool ramanujan = false;
  std::size_t degree = 0;
  double bound = 0;  // 2√(k−1)
  /// Largest |λ| among non-trivial eigenvalues (|λ| ≠ k).
  double max_nontrivial = 0;
  std::optional<double> offending;
};

/// Throws NotRegular / Disconnected when the preconditions fail.
RamanujanResult is_ramanujan_graph(const GraphView& g, const SearchCaps& caps = {});

}  // namespace hdx
