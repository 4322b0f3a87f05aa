#pragma once

#include "hdx/caps.hpp"
#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hdx {

/// Vertex links of one complex, built on first use. Not thread-safe.
class LinkCache {
 public:
  explicit LinkCache(const SimplicialComplex& x) : x_(x), links_(x.num_vertices()) {}
  const SimplicialComplex& complex() const noexcept { return x_; }
  const Link& at(std::size_t v);

 private:
  const SimplicialComplex& x_;
  std::vector<std::unique_ptr<Link>> links_;
};

struct RestrictedCochain {
  /// α_v as an (i-1)-cochain of the link X_v.
  Cochain cochain;
  std::size_t vertex = 0;
};

/// α_v(σ \ {v}) := α(σ). Requires dim α >= 1; throws VertexNotPresent.
RestrictedCochain restrict_to_link(const SimplicialComplex& x, const Cochain& alpha, std::size_t v);
RestrictedCochain restrict_to_link(LinkCache& links, const Cochain& alpha, std::size_t v);

struct LocalMinimality {
  bool locally_minimal = true;
  /// Lowest-index vertex whose restriction is not minimal in its link.
  std::optional<std::size_t> failing_vertex;
};

/// α is locally minimal iff every α_v is minimal modulo B^{i-1}(X_v).
/// 0-cochains are locally minimal by convention.
LocalMinimality is_locally_minimal(const SimplicialComplex& x, const Cochain& alpha, const SearchCaps& caps = {});

struct LocalMinimization {
  Cochain minimized;
  /// α̃ = α + δ(gamma).
  Cochain gamma;
  std::size_t steps = 0;
};

/// Repeatedly replaces α_v by its link-minimal representative at the first
/// offending vertex (ascending scan, restarting after each correction). Each
/// correction strictly lowers ‖α‖, so the loop terminates.
LocalMinimization locally_minimize(const SimplicialComplex& x, const Cochain& alpha, const SearchCaps& caps = {});

struct TriangleProfile {
  std::size_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;
  std::size_t total() const noexcept { return t0 + t1 + t2 + t3; }
};

/// t_k = number of triangles with exactly k edges in α. Requires a 2-complex.
TriangleProfile triangle_profile(const SimplicialComplex& x, const Cochain& alpha);

/// |E_{X_v}(α_v, ᾱ_v)|: link edges joining α_v to its complement.
std::size_t link_cut(LinkCache& links, const Cochain& alpha, std::size_t v);

/// Counting identities around a 1-cochain on a 2-complex.
struct TriangleIdentities {
  TriangleProfile profile;
  std::size_t coboundary_size = 0;       // |δ₁α|
  std::size_t link_cut_sum = 0;          // Σ_v |E_{X_v}(α_v, ᾱ_v)|
  std::int64_t facet_degree_sum = 0;     // Σ_{e∈α} c(e)
  bool coboundary_ok() const { return coboundary_size == profile.t1 + profile.t3; }
  bool link_cut_ok() const { return link_cut_sum == 2 * profile.t1 + 2 * profile.t2; }
  bool degree_ok() const {
    return facet_degree_sum == static_cast<std::int64_t>(profile.t1 + 2 * profile.t2 + 3 * profile.t3);
  }
};

TriangleIdentities triangle_identities(const SimplicialComplex& x, const Cochain& alpha);
TriangleIdentities triangle_identities(LinkCache& links, const Cochain& alpha);

struct ThinThickDecomposition {
  std::vector<std::size_t> touched;  // W
  std::vector<std::size_t> thin;     // R
  std::vector<std::size_t> thick;    // S
  std::size_t r = 0;                 // Σ_{v∈R} |α_v|
  std::size_t s = 0;                 // Σ_{v∈S} |α_v|
  Rational epsilon;
};

/// Thin: |α_v| < (1−ε)Q_v/2 with Q_v = |X_v(0)|. Requires a 2-complex, 0 < ε < 1.
ThinThickDecomposition thin_thick(const SimplicialComplex& x, const Cochain& alpha, const Rational& epsilon);
ThinThickDecomposition thin_thick(LinkCache& links, const Cochain& alpha, const Rational& epsilon);

struct IsoperimetryParams {
  Rational epsilon{1, 10};
  Rational epsilon_prime{1, 10};
  Rational xi{1, 10};
  /// Prime power for the literal-q forms; evaluated only when the complex is
  /// verified link-regular with this q.
  std::optional<int> q;

  /// 1 / (4(1+ε′)).
  Rational eta1() const;
};

struct LemmaRecord {
  std::string name;
  std::string mode;  // "exact", "generalized" or "literal-q"
  double lhs = 0;
  double rhs = 0;
  /// Exact renderings when both sides are rational.
  std::optional<Rational> lhs_exact;
  std::optional<Rational> rhs_exact;
  /// Absent when a precondition of the lemma does not hold (the record says why).
  std::optional<bool> pass;
  std::string note;
};

struct LemmaSuiteReport {
  std::size_t alpha_size = 0;
  Rational alpha_norm;
  bool literal_mode = false;
  std::vector<std::size_t> disconnected_links;
  std::vector<LemmaRecord> records;

  bool all_pass() const;
};

/// Link-regularity with parameter q: every edge in q+1 triangles and every
/// vertex link a (q+1)-regular graph on 2(q²+q+1) vertices.
bool is_link_regular(const SimplicialComplex& x, int q);

/// Evaluates the counting identities and the isoperimetric lemma chain for a
/// 1-cochain. Requires a 2-complex (WrongDimension otherwise).
LemmaSuiteReport dim2_lemma_suite(const SimplicialComplex& x, const Cochain& alpha, const IsoperimetryParams& params,
                                  const SearchCaps& caps = {});

}  // namespace hdx
