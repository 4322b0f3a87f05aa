#pragma once

#include "hdx/bitvec.hpp"
#include "hdx/caps.hpp"
#include "hdx/complex.hpp"
#include "hdx/f2_linear.hpp"
#include "hdx/rational.hpp"

#include <optional>
#include <vector>

namespace hdx {

/// An element of C^i(X, F2), i.e. a subset of X(i).
struct Cochain {
  int dim = 0;
  BitVec support;

  static Cochain zero(const SimplicialComplex& x, int i) { return {i, BitVec(x.count(i))}; }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Matrix of δ_i: rows indexed by X(i+1), columns by X(i). -1 <= i <= d-1.
F2Matrix coboundary_matrix(const SimplicialComplex& x, int i);

/// δ_i applied to an i-cochain.
Cochain coboundary(const SimplicialComplex& x, const Cochain& alpha);

/// Columns of δ_i (δ of each unit cochain), for incremental updates.
std::vector<BitVec> coboundary_columns(const SimplicialComplex& x, int i);

/// Σ c(σ) over the support: ‖α‖ times the weight denominator of X(i).
std::int64_t norm_numerator(const SimplicialComplex& x, const Cochain& alpha);
Rational norm(const SimplicialComplex& x, const Cochain& alpha);

/// B^i = Im δ_{i-1} and Z^i = Ker δ_i for one dimension, with the
/// preimage bookkeeping needed to express coboundaries as δ_{i-1}(γ).
struct CochainSpaces {
  int dim = 0;
  /// Independent columns of δ_{i-1}; coboundary_sources[j] is the (i-1)-face whose
  /// δ is coboundary_basis.vectors[j].
  SubspaceBasis coboundary_basis;
  std::vector<std::size_t> coboundary_sources;
  SubspaceBasis cocycle_basis;
  std::vector<std::int64_t> weights;  // c(σ) for σ ∈ X(i)

  std::size_t dim_b() const noexcept { return coboundary_basis.dim(); }
  std::size_t dim_z() const noexcept { return cocycle_basis.dim(); }
  std::size_t dim_h() const noexcept { return dim_z() - dim_b(); }
};

/// Requires 0 <= i <= d. (Z^d = C^d.)
CochainSpaces cochain_spaces(const SimplicialComplex& x, int i);

struct Norms {
  std::size_t support_size = 0;
  Rational norm;
  /// ‖[α]‖: distance to B^i.
  Rational class_norm;
  /// ‖{α}‖: distance to Z^i.
  Rational cocycle_coset_norm;
};

Norms norms(const SimplicialComplex& x, const Cochain& alpha, const SearchCaps& caps = {});

/// dim Z^i - dim B^i, 0 <= i <= d.
int cohomology_dim(const SimplicialComplex& x, int i);

struct ExpansionConstants {
  int dim = 0;
  /// Coboundary expansion; 0 whenever H^i ≠ 0. Absent when C^i = B^i.
  std::optional<Rational> epsilon;
  /// Cocycle expansion; absent when C^i = Z^i.
  std::optional<Rational> epsilon_tilde;
  /// Cofilling constant; absent when B^{i+1} = 0.
  std::optional<Rational> mu;
  std::size_t dim_h = 0;
  std::optional<Cochain> epsilon_witness;
  std::optional<Cochain> epsilon_tilde_witness;
  /// A coboundary β attaining μ_i.
  std::optional<Cochain> mu_witness;
};

/// Exact ε_i, ε̃_i and μ_i by enumerating one representative per coset.
/// μ_i is computed from B^{i+1} directly, independent of the ε̃_i scan.
ExpansionConstants expansion_constants(const SimplicialComplex& x, int i, const SearchCaps& caps = {});

struct Systole {
  Rational norm;
  std::size_t support_size = 0;
  Cochain witness;
};

/// Minimum norm over Z^i \ B^i; absent when H^i = 0.
std::optional<Systole> systole(const SimplicialComplex& x, int i, const SearchCaps& caps = {});

struct GromovCertificate {
  struct Level {
    int dim = 0;
    std::optional<Rational> mu_i;
    bool cofilling_ok = true;
    std::optional<Rational> systole_i;
    bool systole_ok = true;
    /// β attaining μ_i when the cofilling bound fails.
    std::optional<Cochain> cofilling_witness;
    /// Non-trivial cocycle of norm below η when the systolic bound fails.
    std::optional<Cochain> systole_witness;
  };
  Rational mu;
  Rational eta;
  std::vector<Level> levels;

  bool cofilling_ok() const;
  bool systole_ok() const;
  bool ok() const { return cofilling_ok() && systole_ok(); }
};

/// Checks μ_i(X) <= μ and ‖α‖ >= η on Z^i \ B^i for every 0 <= i <= d-1.
/// The systolic condition is vacuous where H^i = 0.
GromovCertificate certify_gromov(const SimplicialComplex& x, const Rational& mu, const Rational& eta,
                                 const SearchCaps& caps = {});

struct SpectralSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::optional<std::size_t> regular_degree;
  std::vector<double> adjacency_spectrum;
  std::optional<double> laplacian_gap;
};

struct ExpansionReport {
  int dim = 0;
  std::vector<std::size_t> f_vector;
  std::vector<ExpansionConstants> constants;  // per computed i
  std::vector<std::optional<Systole>> systoles;
  std::vector<int> cohomology;  // dim H^i, i = 0..d
  std::optional<SpectralSummary> spectral;
};

struct ReportOptions {
  /// Only this i when set, otherwise all 0 <= i <= d-1.
  std::optional<int> only_dim;
  bool spectral = true;
  SearchCaps caps;
};

ExpansionReport expansion_report(const SimplicialComplex& x, const ReportOptions& options = {});

}  // namespace hdx
