#include "hdx/local_structure.hpp"

#include "hdx/errors.hpp"
#include "hdx/f2_linear.hpp"
#include "hdx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hdx {

const Link& LinkCache::at(std::size_t v) {
  if (v >= x_.num_vertices()) throw Error(ErrorCode::VertexNotPresent, "vertex index " + std::to_string(v));
  if (!links_[v]) links_[v] = std::make_unique<Link>(link(x_, Face{static_cast<int>(v)}));
  return *links_[v];
}

namespace {

void require_two_dim(const SimplicialComplex& x, const Cochain& alpha) {
  if (x.dim() != 2) throw Error(ErrorCode::WrongDimension, "expected a 2-dimensional complex");
  if (alpha.dim != 1) throw Error(ErrorCode::WrongDimension, "expected a 1-cochain");
  if (alpha.support.size() != x.count(1)) throw Error(ErrorCode::BadParams, "cochain length does not match X(1)");
}

// Link coboundary spaces, keyed by vertex, for one cochain dimension.
class LinkSpaces {
 public:
  LinkSpaces(LinkCache& links, int dim) : links_(links), dim_(dim) {}

  const CochainSpaces& at(std::size_t v) {
    auto it = cache_.find(v);
    if (it == cache_.end()) it = cache_.emplace(v, cochain_spaces(links_.at(v).complex, dim_)).first;
    return it->second;
  }

 private:
  LinkCache& links_;
  int dim_;
  std::map<std::size_t, CochainSpaces> cache_;
};

}  // namespace

RestrictedCochain restrict_to_link(LinkCache& links, const Cochain& alpha, std::size_t v) {
  const auto& x = links.complex();
  if (alpha.dim < 1)
    throw Error(ErrorCode::DimensionOutOfRange, "restriction to a link needs a cochain of dimension >= 1");
  if (!x.has_dim(alpha.dim) || alpha.support.size() != x.count(alpha.dim))
    throw Error(ErrorCode::BadParams, "cochain does not fit the complex");
  if (v >= x.num_vertices()) throw Error(ErrorCode::VertexNotPresent, "vertex index " + std::to_string(v));
  const Link& l = links.at(v);
  const int k = alpha.dim - 1;
  RestrictedCochain out{Cochain::zero(l.complex, k), v};
  const auto& map = l.to_parent[static_cast<std::size_t>(k + 1)];
  for (std::size_t j = 0; j < map.size(); ++j)
    if (alpha.support.get(map[j])) out.cochain.support.set(j);
  return out;
}

RestrictedCochain restrict_to_link(const SimplicialComplex& x, const Cochain& alpha, std::size_t v) {
  LinkCache links(x);
  return restrict_to_link(links, alpha, v);
}

LocalMinimality is_locally_minimal(const SimplicialComplex& x, const Cochain& alpha, const SearchCaps& caps) {
  if (!x.has_dim(alpha.dim) || alpha.dim < 0)
    throw Error(ErrorCode::DimensionOutOfRange, "cochain dimension " + std::to_string(alpha.dim));
  if (alpha.dim == 0) return {};
  LinkCache links(x);
  LinkSpaces spaces(links, alpha.dim - 1);
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    const auto rv = restrict_to_link(links, alpha, v);
    if (rv.cochain.support.none()) continue;
    const auto& sp = spaces.at(v);
    const auto cm = min_weight_in_coset(rv.cochain.support, sp.coboundary_basis.vectors, sp.weights, caps);
    if (cm.weight < norm_numerator(links.at(v).complex, rv.cochain)) return {false, v};
  }
  return {};
}

LocalMinimization locally_minimize(const SimplicialComplex& x, const Cochain& alpha, const SearchCaps& caps) {
  if (!x.has_dim(alpha.dim) || alpha.dim < 0)
    throw Error(ErrorCode::DimensionOutOfRange, "cochain dimension " + std::to_string(alpha.dim));
  LocalMinimization out{alpha, Cochain{alpha.dim - 1, BitVec(x.count(alpha.dim - 1))}, 0};
  if (alpha.dim == 0) return out;
  LinkCache links(x);
  LinkSpaces spaces(links, alpha.dim - 1);
  const int i = alpha.dim;
  std::int64_t current = norm_numerator(x, out.minimized);
  for (;;) {
    bool corrected = false;
    for (std::size_t v = 0; v < x.num_vertices() && !corrected; ++v) {
      const auto rv = restrict_to_link(links, out.minimized, v);
      if (rv.cochain.support.none()) continue;
      const Link& l = links.at(v);
      const auto& sp = spaces.at(v);
      const auto cm = min_weight_in_coset(rv.cochain.support, sp.coboundary_basis.vectors, sp.weights, caps);
      if (cm.weight >= norm_numerator(l.complex, rv.cochain)) continue;
      // lift γ_v ∈ C^{i-2}(X_v) to the (i-1)-faces of X through v
      Cochain lifted = Cochain::zero(x, i - 1);
      const auto& up = l.to_parent[static_cast<std::size_t>(i - 1)];
      cm.coefficients.for_each_set([&](std::size_t j) { lifted.support.flip(up[sp.coboundary_sources[j]]); });
      out.minimized.support ^= coboundary(x, lifted).support;
      out.gamma.support ^= lifted.support;
      ++out.steps;
      const std::int64_t next = norm_numerator(x, out.minimized);
      if (next >= current) throw std::logic_error("local correction did not decrease the norm");
      current = next;
      corrected = true;
    }
    if (!corrected) break;
  }
  return out;
}

TriangleProfile triangle_profile(const SimplicialComplex& x, const Cochain& alpha) {
  require_two_dim(x, alpha);
  TriangleProfile p;
  for (std::size_t t = 0; t < x.count(2); ++t) {
    int hits = 0;
    for (std::size_t e : x.subfaces(2, t)) hits += alpha.support.get(e) ? 1 : 0;
    switch (hits) {
      case 0: ++p.t0; break;
      case 1: ++p.t1; break;
      case 2: ++p.t2; break;
      default: ++p.t3; break;
    }
  }
  return p;
}

std::size_t link_cut(LinkCache& links, const Cochain& alpha, std::size_t v) {
  require_two_dim(links.complex(), alpha);
  const auto rv = restrict_to_link(links, alpha, v);
  const auto& lc = links.at(v).complex;
  std::size_t cut = 0;
  for (const auto& e : lc.faces(1))
    if (rv.cochain.support.get(static_cast<std::size_t>(e[0])) != rv.cochain.support.get(static_cast<std::size_t>(e[1])))
      ++cut;
  return cut;
}

TriangleIdentities triangle_identities(LinkCache& links, const Cochain& alpha) {
  const auto& x = links.complex();
  TriangleIdentities id;
  id.profile = triangle_profile(x, alpha);
  id.coboundary_size = coboundary(x, alpha).support.count();
  for (std::size_t v = 0; v < x.num_vertices(); ++v) id.link_cut_sum += link_cut(links, alpha, v);
  id.facet_degree_sum = norm_numerator(x, alpha);
  return id;
}

TriangleIdentities triangle_identities(const SimplicialComplex& x, const Cochain& alpha) {
  LinkCache links(x);
  return triangle_identities(links, alpha);
}

ThinThickDecomposition thin_thick(LinkCache& links, const Cochain& alpha, const Rational& epsilon) {
  const auto& x = links.complex();
  require_two_dim(x, alpha);
  if (sgn(epsilon) <= 0 || epsilon >= 1) throw Error(ErrorCode::BadParams, "thinness parameter must lie in (0,1)");
  ThinThickDecomposition d;
  d.epsilon = epsilon;
  std::vector<std::size_t> touches(x.num_vertices(), 0);
  alpha.support.for_each_set([&](std::size_t e) {
    for (int v : x.faces(1)[e]) ++touches[static_cast<std::size_t>(v)];
  });
  const Rational one_minus = Rational(1) - epsilon;
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    if (touches[v] == 0) continue;
    d.touched.push_back(v);
    const auto q_v = static_cast<long>(links.at(v).complex.num_vertices());
    if (Rational(2 * static_cast<long>(touches[v])) < one_minus * q_v) {
      d.thin.push_back(v);
      d.r += touches[v];
    } else {
      d.thick.push_back(v);
      d.s += touches[v];
    }
  }
  return d;
}

ThinThickDecomposition thin_thick(const SimplicialComplex& x, const Cochain& alpha, const Rational& epsilon) {
  LinkCache links(x);
  return thin_thick(links, alpha, epsilon);
}

Rational IsoperimetryParams::eta1() const { return Rational(1) / (4 * (Rational(1) + epsilon_prime)); }

bool LemmaSuiteReport::all_pass() const {
  return std::none_of(records.begin(), records.end(),
                      [](const LemmaRecord& r) { return r.mode != "precondition" && r.pass == false; });
}

bool is_link_regular(const SimplicialComplex& x, int q) {
  if (x.dim() != 2 || q < 2) return false;
  for (std::size_t e = 0; e < x.count(1); ++e)
    if (x.facet_degree(1, e) != q + 1) return false;
  LinkCache links(x);
  const auto big_q = static_cast<std::size_t>(2 * (q * q + q + 1));
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    const auto g = GraphView::from_complex(links.at(v).complex);
    if (g.size() != big_q) return false;
    const auto deg = g.regular_degree();
    if (!deg || *deg != static_cast<std::size_t>(q + 1)) return false;
  }
  return true;
}

namespace {

LemmaRecord exact_record(std::string name, std::string mode, const Rational& lhs, const Rational& rhs, bool pass,
                         std::string note = {}) {
  LemmaRecord r;
  r.name = std::move(name);
  r.mode = std::move(mode);
  r.lhs = to_double(lhs);
  r.rhs = to_double(rhs);
  r.lhs_exact = lhs;
  r.rhs_exact = rhs;
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

LemmaRecord float_record(std::string name, std::string mode, double lhs, double rhs, std::optional<bool> pass,
                         std::string note = {}) {
  LemmaRecord r;
  r.name = std::move(name);
  r.mode = std::move(mode);
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

struct VertexData {
  std::size_t v;
  double a;          // |α_v|
  double q_v;        // |X_v(0)|
  double cut;        // |E_{X_v}(α_v, ᾱ_v)|
  std::optional<double> gap;
  bool thin;
};

// Per-vertex lower bound cut_v >= factor(v) · a_v, reported at the tightest vertex.
LemmaRecord per_vertex_bound(const std::string& name, const std::string& mode, const std::vector<VertexData>& vs,
                             const std::vector<std::string>& labels, auto&& coefficient, auto&& applies,
                             const std::string& precondition) {
  std::optional<double> worst_slack;
  double worst_lhs = 0, worst_rhs = 0;
  std::string worst_label;
  bool ok = true, skipped = false, any = false;
  for (const auto& d : vs) {
    if (!applies(d)) continue;
    if (!d.gap) {
      skipped = true;
      continue;
    }
    any = true;
    const double rhs = coefficient(d) * d.a;
    const double slack = d.cut - rhs;
    if (slack < -kSpectralTolerance) ok = false;
    if (!worst_slack || slack < *worst_slack) {
      worst_slack = slack;
      worst_lhs = d.cut;
      worst_rhs = rhs;
      worst_label = labels[d.v];
    }
  }
  if (!any && skipped) return float_record(name, mode, 0, 0, std::nullopt, "all applicable links disconnected");
  std::string note = any ? "tightest at vertex " + worst_label : "no applicable vertices";
  if (!precondition.empty()) note += "; " + precondition;
  if (skipped) note += "; disconnected links skipped";
  return float_record(name, mode, worst_lhs, worst_rhs, ok, note);
}

}  // namespace

LemmaSuiteReport dim2_lemma_suite(const SimplicialComplex& x, const Cochain& alpha, const IsoperimetryParams& params,
                                  const SearchCaps& caps) {
  require_two_dim(x, alpha);
  if (sgn(params.epsilon) <= 0 || params.epsilon >= 1 || sgn(params.epsilon_prime) <= 0 || sgn(params.xi) <= 0)
    throw Error(ErrorCode::BadParams, "epsilon in (0,1), epsilon' > 0 and xi > 0 are required");
  LinkCache links(x);
  LemmaSuiteReport rep;
  rep.alpha_size = alpha.support.count();
  rep.alpha_norm = norm(x, alpha);
  const auto ids = triangle_identities(links, alpha);
  const auto tt = thin_thick(links, alpha, params.epsilon);
  const auto& p = ids.profile;
  const double eps = to_double(params.epsilon);
  const double epsp = to_double(params.epsilon_prime);
  const double xi = to_double(params.xi);
  const double alpha_size = static_cast<double>(rep.alpha_size);
  const auto R = [](auto v) { return Rational(static_cast<long>(v)); };

  rep.records.push_back(exact_record("triangle_degree_identity", "exact", R(p.t1 + 2 * p.t2 + 3 * p.t3),
                                     R(ids.facet_degree_sum), ids.degree_ok(), "t1+2t2+3t3 = sum of c(e) over alpha"));
  rep.records.push_back(exact_record("coboundary_identity", "exact", R(ids.coboundary_size), R(p.t1 + p.t3),
                                     ids.coboundary_ok(), "|delta alpha| = t1+t3"));
  rep.records.push_back(exact_record("link_cut_identity", "exact", R(ids.link_cut_sum), R(2 * p.t1 + 2 * p.t2),
                                     ids.link_cut_ok(), "sum of link cuts = 2t1+2t2"));
  rep.records.push_back(exact_record("thin_thick_sum", "exact", R(tt.r + tt.s), R(2 * rep.alpha_size),
                                     tt.r + tt.s == 2 * rep.alpha_size, "r+s = 2|alpha|"));
  rep.records.push_back(exact_record("norm_budget", "precondition", rep.alpha_norm, params.eta1(),
                                     rep.alpha_norm <= params.eta1(), "||alpha|| <= 1/(4(1+eps'))"));

  std::vector<VertexData> vs;
  std::vector<char> thin_flag(x.num_vertices(), 0);
  for (auto v : tt.thin) thin_flag[v] = 1;
  for (auto v : tt.touched) {
    const auto& lc = links.at(v).complex;
    const auto g = GraphView::from_complex(lc);
    VertexData d{v, static_cast<double>(restrict_to_link(links, alpha, v).cochain.support.count()),
                 static_cast<double>(lc.num_vertices()), static_cast<double>(link_cut(links, alpha, v)),
                 std::nullopt, thin_flag[v] != 0};
    if (g.connected()) {
      d.gap = laplacian_gap(g, caps);
    } else {
      rep.disconnected_links.push_back(v);
    }
    vs.push_back(d);
  }
  const bool half_bound = std::all_of(vs.begin(), vs.end(), [](const VertexData& d) { return 2 * d.a <= d.q_v; });
  const bool links_ok = rep.disconnected_links.empty();
  const std::string half_note = half_bound ? "" : "some |alpha_v| > Q_v/2 (alpha not locally minimal)";
  auto all = [](const VertexData&) { return true; };
  auto thin_only = [](const VertexData& d) { return d.thin; };

  rep.records.push_back(per_vertex_bound(
      "link_cut_alon_milman", "generalized", vs, x.labels(),
      [](const VertexData& d) { return (d.q_v - d.a) / d.q_v * *d.gap; }, all, ""));
  {
    auto rec = per_vertex_bound(
        "link_exit_bound", "generalized", vs, x.labels(), [](const VertexData& d) { return 0.5 * *d.gap; }, all,
        half_note);
    if (!half_bound) rec.pass.reset();
    rep.records.push_back(rec);
  }
  rep.records.push_back(per_vertex_bound(
      "thin_link_exit_bound", "generalized", vs, x.labels(),
      [&](const VertexData& d) { return 0.5 * (1.0 + eps) * *d.gap; }, thin_only, ""));

  // Chain: 2t1+2t2 >= Σ_W ½λ_v a_v + (ε/2) Σ_R λ_v a_v, then subtract the degree identity.
  double chain_rhs = 0;
  for (const auto& d : vs) {
    if (!d.gap) continue;
    chain_rhs += 0.5 * *d.gap * d.a;
    if (d.thin) chain_rhs += 0.5 * eps * *d.gap * d.a;
  }
  const double two_t = 2.0 * static_cast<double>(p.t1 + p.t2);
  const double t1_3t3 = static_cast<double>(p.t1) - 3.0 * static_cast<double>(p.t3);
  const double lower_t1 = chain_rhs - static_cast<double>(ids.facet_degree_sum);
  const std::optional<bool> chain_ok =
      (half_bound && links_ok) ? std::optional<bool>(true) : std::nullopt;
  const std::string chain_note = half_bound ? (links_ok ? "" : "disconnected links") : half_note;
  rep.records.push_back(float_record("two_t1_plus_two_t2_bound", "generalized", two_t, chain_rhs,
                                     chain_ok ? std::optional<bool>(two_t >= chain_rhs - kSpectralTolerance)
                                              : std::nullopt,
                                     chain_note));
  rep.records.push_back(float_record("t1_minus_3t3_bound", "generalized", t1_3t3, lower_t1,
                                     chain_ok ? std::optional<bool>(t1_3t3 >= lower_t1 - kSpectralTolerance)
                                              : std::nullopt,
                                     chain_note));
  rep.records.push_back(float_record(
      "coboundary_lower_bound", "generalized", static_cast<double>(ids.coboundary_size), lower_t1,
      chain_ok ? std::optional<bool>(static_cast<double>(ids.coboundary_size) >= lower_t1 - kSpectralTolerance)
               : std::nullopt,
      chain_note));

  // Thick vertices in the 1-skeleton.
  const auto skel = GraphView::from_complex(x);
  BitVec thick_mask(x.num_vertices());
  for (auto v : tt.thick) thick_mask.set(v);
  const double n = static_cast<double>(x.num_vertices());
  const double e_s = static_cast<double>(skel.internal_edges(thick_mask));
  const std::optional<double> skel_gap = skel.connected() ? laplacian_gap(skel, caps) : std::optional<double>();
  const double gap = skel_gap.value_or(0.0);
  {
    double deg_sum = 0;
    for (auto v : tt.thick) deg_sum += static_cast<double>(skel.degree(v));
    const double s_size = static_cast<double>(tt.thick.size());
    if (skel_gap) {
      const double rhs = 0.5 * (deg_sum - s_size * (n - s_size) / n * *skel_gap);
      rep.records.push_back(float_record("thick_edge_alon_milman", "generalized", e_s, rhs,
                                         e_s <= rhs + kSpectralTolerance, "|E(S)| <= (sum deg - |S||S'|l1/n)/2"));
    } else {
      rep.records.push_back(float_record("thick_edge_alon_milman", "generalized", e_s, 0, std::nullopt,
                                         "1-skeleton disconnected"));
    }
  }
  const auto reg = skel.regular_degree();
  const double coef_a = 1.0 / ((1.0 - eps) * (1.0 - eps) * (1.0 + epsp));
  auto thick_edge_bound = [&](const std::string& mode, double big_q, double second_eig) {
    const double coef = coef_a + 2.0 * std::max(0.0, second_eig) / ((1.0 - eps) * big_q);
    const double budget = big_q * n / (8.0 * (1.0 + epsp));
    std::optional<bool> pass;
    std::string note = "coefficient " + std::to_string(coef);
    if (alpha_size <= budget)
      pass = e_s <= coef * alpha_size + kSpectralTolerance;
    else
      note += "; |alpha| above Qn/(8(1+eps'))";
    rep.records.push_back(float_record("thick_edge_bound", mode, e_s, coef * alpha_size, pass, note));
    // r >= ξ|α| once fewer than (1-ξ)|α| edges can join two thick vertices.
    std::optional<bool> thin_pass;
    std::string thin_note;
    if (pass.has_value() && coef < 1.0 - xi)
      thin_pass = static_cast<double>(tt.r) >= xi * alpha_size - kSpectralTolerance;
    else
      thin_note = "needs thick-edge coefficient < 1 - xi within the norm budget";
    rep.records.push_back(
        float_record("thin_contribution_bound", mode, static_cast<double>(tt.r), xi * alpha_size, thin_pass, thin_note));
  };
  if (reg && skel_gap) {
    thick_edge_bound("generalized", static_cast<double>(*reg), static_cast<double>(*reg) - gap);
  } else {
    rep.records.push_back(float_record("thick_edge_bound", "generalized", e_s, 0, std::nullopt,
                                       "needs a connected regular 1-skeleton"));
  }

  if (params.q && is_link_regular(x, *params.q)) {
    rep.literal_mode = true;
    const double q = *params.q;
    const double gap = q + 1.0 - std::sqrt(q);
    const double big_q = 2.0 * (q * q + q + 1.0);
    rep.records.push_back(exact_record("triangle_degree_identity", "literal-q", R(p.t1 + 2 * p.t2 + 3 * p.t3),
                                       R((*params.q + 1) * static_cast<long>(rep.alpha_size)),
                                       p.t1 + 2 * p.t2 + 3 * p.t3 ==
                                           static_cast<std::size_t>(*params.q + 1) * rep.alpha_size,
                                       "t1+2t2+3t3 = (q+1)|alpha|"));
    {
      auto rec = per_vertex_bound(
          "link_exit_bound", "literal-q", vs, x.labels(), [&](const VertexData&) { return 0.5 * gap; }, all,
          half_note);
      if (!half_bound) rec.pass.reset();
      rep.records.push_back(rec);
    }
    rep.records.push_back(per_vertex_bound(
        "thin_link_exit_bound", "literal-q", vs, x.labels(),
        [&](const VertexData&) { return 0.5 * (1.0 + eps) * gap; }, thin_only, ""));
    const double r = static_cast<double>(tt.r);
    const double rhs_2t = gap * alpha_size + 0.5 * eps * gap * r;
    const double rhs_t1 = 0.5 * eps * gap * r - std::sqrt(q) * alpha_size;
    const std::optional<bool> lit_ok = half_bound ? std::optional<bool>(true) : std::nullopt;
    rep.records.push_back(float_record("two_t1_plus_two_t2_bound", "literal-q", two_t, rhs_2t,
                                       lit_ok ? std::optional<bool>(two_t >= rhs_2t - kSpectralTolerance)
                                              : std::nullopt,
                                       half_note));
    rep.records.push_back(float_record("t1_minus_3t3_bound", "literal-q", t1_3t3, rhs_t1,
                                       lit_ok ? std::optional<bool>(t1_3t3 >= rhs_t1 - kSpectralTolerance)
                                              : std::nullopt,
                                       half_note));
    thick_edge_bound("literal-q", big_q, 6.0 * q);
  }
  return rep;
}

}  // namespace hdx
