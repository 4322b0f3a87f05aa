#pragma once

#include "hdx/caps.hpp"
#include "hdx/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hdx {

/// Δ_n^(d): every (d+1)-subset of n vertices labelled "0".."n-1". Requires 1 <= d < n.
SimplicialComplex complete_complex(int n, int d);

/// Arithmetic in F_q for q in {2, 3, 4, 5, 7}. Elements are 0..q-1; for q = 4
/// element 2 is a root ω of x²+x+1 and 3 is ω+1.
class FiniteField {
 public:
  /// Throws UnsupportedField.
  explicit FiniteField(int q);
  int order() const noexcept { return q_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int sub(int a, int b) const { return add(a, neg_[static_cast<std::size_t>(b)]); }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

 private:
  int q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// Row-major basis in reduced row echelon form.
using SubspaceRows = std::vector<std::vector<int>>;

/// All subspaces of F_q^m of dimensions 1..m-1, each in RREF, sorted
/// lexicographically by their row-major entries within a dimension.
struct SubspaceTable {
  int q = 0;
  int m = 0;
  /// by_dim[k-1] holds the k-dimensional subspaces.
  std::vector<std::vector<SubspaceRows>> by_dim;
};

/// Requires q supported and 2 <= m <= 4.
SubspaceTable subspace_table(int q, int m);

/// Gaussian binomial [m choose k]_q.
std::int64_t gaussian_binomial(int m, int k, int q);

/// "k:r1|r2|..." with each row written as its digits.
std::string subspace_label(const SubspaceRows& rows);

/// Complete flags of proper nonzero subspaces of F_q^m, as a complex of
/// dimension m-2. Throws UnsupportedField, BadParams unless 3 <= m <= 4.
SimplicialComplex flag_complex(int q, int m);

struct CayleyComplex {
  SimplicialComplex complex;
  std::size_t group_order = 0;
  /// Largest k <= D with a k-clique face.
  int dimension = 0;
  /// uncovered[k]: cliques with k+1 vertices lying in no top-dimensional clique.
  std::vector<std::size_t> uncovered;
  bool pure() const;
  /// Second largest adjacency eigenvalue of the Cayley graph, when within the spectrum cap.
  std::optional<double> second_eigenvalue;
};

/// Clique complex of Cay(G, S) for the permutation group G generated by S on
/// {0..degree-1}, cliques of at most max_dim+1 vertices, truncated to the
/// largest nonempty dimension. Vertex labels are image lists joined with '.'.
/// Throws BadParams (not a permutation, identity in S), NonSymmetricGenerators,
/// GroupTooLarge.
CayleyComplex cayley_clique_complex(int degree, const std::vector<std::vector<int>>& generators, int max_dim,
                                    const SearchCaps& caps = {});

/// Named test complexes: rp2_6, cycle_<k>, petersen, fano_incidence,
/// octahedron_boundary, torus_7, complete_<n>_<d>, two_triangles, two_edges.
/// Throws UnknownFixture.
SimplicialComplex fixture(const std::string& name);

/// A representative name for every fixture family.
std::vector<std::string> fixture_names();

}  // namespace hdx
