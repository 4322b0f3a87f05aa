#include "hdx/harness.hpp"

#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/oracles.hpp"
#include "hdx/overlap.hpp"
#include "hdx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace hdx {

bool SuiteReport::pass() const { return count("fail") == 0; }

std::size_t SuiteReport::count(const std::string& status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const SuiteCheck& c) { return c.status == status; }));
}

Json integer_value(std::int64_t n) {
  Json j;
  j["exact"] = "integer";
  j["value"] = std::to_string(n);
  return j;
}

namespace {

int config_int(const Json& v, const std::string& key, int lo) {
  if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > 1'000'000)
    throw Error(ErrorCode::ConfigError, "\"" + key + "\" must be an integer >= " + std::to_string(lo));
  return v.get<int>();
}

Rational config_rational(const Json& v, const std::string& key) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return make_rational(v.get<std::int64_t>());
  } catch (const Error&) {
  }
  throw Error(ErrorCode::ConfigError, "\"" + key + "\" must be a rational string such as \"1/10\"");
}

}  // namespace

SuiteConfig suite_config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "configuration must be a JSON object");
  SuiteConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "fixtures") {
      if (!v.is_array()) throw Error(ErrorCode::ConfigError, "\"fixtures\" must be an array of names");
      c.fixtures.clear();
      for (const auto& f : v) {
        if (!f.is_string()) throw Error(ErrorCode::ConfigError, "fixture names must be strings");
        c.fixtures.push_back(f.get<std::string>());
      }
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw Error(ErrorCode::ConfigError, "\"seed\" must be a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    } else if (key == "random_complexes") {
      c.random_complexes = config_int(v, key, 0);
    } else if (key == "random_graphs") {
      c.random_graphs = config_int(v, key, 0);
    } else if (key == "cochain_samples") {
      c.cochain_samples = config_int(v, key, 0);
    } else if (key == "localmin_samples") {
      c.localmin_samples = config_int(v, key, 0);
    } else if (key == "coset_instances") {
      c.coset_instances = config_int(v, key, 0);
    } else if (key == "overlap_instances") {
      c.overlap_instances = config_int(v, key, 0);
    } else if (key == "caps") {
      if (!v.is_string()) throw Error(ErrorCode::ConfigError, "\"caps\" must be a \"key=value,...\" string");
      c.caps = SearchCaps::parse(v.get<std::string>(), c.caps);
    } else if (key == "epsilon") {
      c.params.epsilon = config_rational(v, key);
    } else if (key == "epsilon_prime") {
      c.params.epsilon_prime = config_rational(v, key);
    } else if (key == "xi") {
      c.params.xi = config_rational(v, key);
    } else if (key == "q") {
      c.params.q = config_int(v, key, 2);
    } else if (key == "certify_mu") {
      c.certify_mu = config_rational(v, key);
    } else if (key == "certify_eta") {
      c.certify_eta = config_rational(v, key);
    } else if (key == "json_out" || key == "csv_out") {
      if (!v.is_string()) throw Error(ErrorCode::ConfigError, "\"" + key + "\" must be a path");
      (key == "json_out" ? c.json_out : c.csv_out) = v.get<std::string>();
    } else {
      throw Error(ErrorCode::ConfigError, "unknown key \"" + key + "\"");
    }
  }
  if (c.fixtures.empty()) throw Error(ErrorCode::ConfigError, "fixture list is empty");
  if (sgn(c.params.epsilon) <= 0 || c.params.epsilon >= 1)
    throw Error(ErrorCode::ConfigError, "epsilon must lie in (0,1)");
  if (sgn(c.params.epsilon_prime) <= 0 || sgn(c.params.xi) <= 0)
    throw Error(ErrorCode::ConfigError, "epsilon_prime and xi must be positive");
  if (sgn(c.certify_mu) <= 0 || sgn(c.certify_eta) <= 0)
    throw Error(ErrorCode::ConfigError, "certify_mu and certify_eta must be positive");
  return c;
}

SimplicialComplex random_pure_complex(std::mt19937_64& rng, int max_vertices, int max_dim) {
  const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim));
  const int n = d + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_vertices - d)));
  const int target = 1 + static_cast<int>(rng() % 20);
  std::set<Face> facets;
  for (int t = 0; t < target; ++t) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    for (int k = 0; k <= d; ++k)
      std::swap(verts[static_cast<std::size_t>(k)],
                verts[static_cast<std::size_t>(k) + rng() % static_cast<std::uint64_t>(n - k)]);
    Face f(verts.begin(), verts.begin() + d + 1);
    std::sort(f.begin(), f.end());
    facets.insert(f);
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return SimplicialComplex::from_index_facets(labels, {facets.begin(), facets.end()});
}

std::vector<std::pair<std::size_t, std::size_t>> random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto threshold = static_cast<std::uint64_t>(p * 1e6);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 1000000 < threshold) edges.emplace_back(u, v);
  return edges;
}

Cochain random_cochain(std::mt19937_64& rng, const SimplicialComplex& x, int i) {
  Cochain c = Cochain::zero(x, i);
  const std::uint64_t density = 1 + rng() % 7;  // in eighths
  for (std::size_t k = 0; k < c.support.size(); ++k)
    if (rng() % 8 < density) c.support.set(k);
  return c;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Json opt_rational(const std::optional<Rational>& r) { return r ? rational_value(*r) : Json(nullptr); }

Json int_value(std::size_t n) { return integer_value(static_cast<std::int64_t>(n)); }

const char* status_of(bool ok) { return ok ? "pass" : "fail"; }

class Suite {
 public:
  explicit Suite(const SuiteConfig& c) : config(c) {}

  std::mt19937_64 rng_for(const std::string& tag) const { return std::mt19937_64(config.seed ^ fnv1a(tag)); }

  void add(std::string id, std::string anchor, std::string inputs, Json lhs, Json rhs, bool ok, std::string note = {}) {
    checks.push_back({std::move(id), std::move(anchor), std::move(inputs), std::move(lhs), std::move(rhs),
                      status_of(ok), std::move(note)});
  }
  void add_status(std::string id, std::string anchor, std::string inputs, Json lhs, Json rhs, std::string status,
                  std::string note = {}) {
    checks.push_back({std::move(id), std::move(anchor), std::move(inputs), std::move(lhs), std::move(rhs),
                      std::move(status), std::move(note)});
  }
  // A check that threw: recorded as failed (or skipped for caps), never propagated.
  void guard(const std::string& id, const std::string& anchor, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      const bool capped = e.code() == ErrorCode::SearchSpaceTooLarge || e.code() == ErrorCode::TooLarge;
      add_status(id, anchor, "", nullptr, nullptr, capped ? "skipped" : "fail", e.what());
    } catch (const std::exception& e) {
      add_status(id, anchor, "", nullptr, nullptr, "fail", e.what());
    }
  }

  const SuiteConfig& config;
  std::vector<SuiteCheck> checks;
};

std::string describe(const std::string& name, const SimplicialComplex& x) {
  std::ostringstream s;
  s << name << " f=(";
  for (int i = 0; i <= x.dim(); ++i) s << (i ? "," : "") << x.count(i);
  s << ")";
  return s.str();
}

// δ_{i+1} δ_i = 0 for every i; returns the number of nonzero rows in the products.
std::size_t delta_square_defect(const SimplicialComplex& x) {
  std::size_t bad = 0;
  for (int i = -1; i <= x.dim() - 2; ++i) {
    const F2Matrix p = coboundary_matrix(x, i + 1) * coboundary_matrix(x, i);
    for (std::size_t r = 0; r < p.rows(); ++r)
      if (p.row(r).any()) ++bad;
  }
  return bad;
}

void fixture_checks(Suite& s, const std::string& name, const SimplicialComplex& x) {
  const auto& caps = s.config.caps;
  const std::string in = describe(name, x);

  s.guard("delta_squared." + name, "d_{i+1} d_i = 0", [&] {
    const auto bad = delta_square_defect(x);
    s.add("delta_squared." + name, "d_{i+1} d_i = 0", in, int_value(bad), integer_value(0), bad == 0);
  });

  for (int i = 0; i <= x.dim() - 1; ++i) {
    const std::string tag = name + ".i" + std::to_string(i);
    s.guard("expansion." + tag, "eps_i > 0 <=> H^i = 0; mu_i = 1/eps~_i", [&] {
      const auto c = expansion_constants(x, i, caps);
      const bool positive = c.epsilon && sgn(*c.epsilon) > 0;
      const bool item1 = c.epsilon ? (positive == (c.dim_h == 0)) : c.dim_h == 0;
      s.add("prop4.epsilon_vs_cohomology." + tag, "eps_i > 0 <=> H^i = 0", in, opt_rational(c.epsilon),
            int_value(c.dim_h), item1, "rhs is dim H^i");
      bool item2 = false;
      Json rhs = nullptr;
      if (c.mu && c.epsilon_tilde) {
        item2 = *c.mu == 1 / *c.epsilon_tilde;
        rhs = rational_value(1 / *c.epsilon_tilde);
      } else {
        item2 = !c.mu && !c.epsilon_tilde;
      }
      s.add("prop4.mu_inverse." + tag, "mu_i = 1/eps~_i", in, opt_rational(c.mu), rhs, item2);

      if (x.count(i) <= 20 && x.count(i + 1) <= 64) {
        const auto o = oracle::expansion(x, i);
        const auto sys = systole(x, i, caps);
        const std::optional<Rational> sys_norm = sys ? std::optional<Rational>(sys->norm) : std::nullopt;
        Json l, r;
        l["epsilon"] = opt_rational(c.epsilon);
        l["epsilon_tilde"] = opt_rational(c.epsilon_tilde);
        l["mu"] = opt_rational(c.mu);
        l["systole"] = opt_rational(sys_norm);
        l["dim_h"] = int_value(c.dim_h);
        r["epsilon"] = opt_rational(o.epsilon);
        r["epsilon_tilde"] = opt_rational(o.epsilon_tilde);
        r["mu"] = opt_rational(o.mu);
        r["systole"] = opt_rational(o.systole);
        r["dim_h"] = int_value(static_cast<std::size_t>(o.dim_h()));
        const bool ok = c.epsilon == o.epsilon && c.epsilon_tilde == o.epsilon_tilde && c.mu == o.mu &&
                        sys_norm == o.systole && static_cast<int>(c.dim_h) == o.dim_h();
        s.add("oracle.expansion." + tag, "exact constants = exhaustive enumeration", in, l, r, ok);
      }
    });
  }

  if (x.dim() == 1) {
    const auto g = GraphView::from_complex(x);
    if (g.regular_degree() && g.size() >= 2 && static_cast<int>(g.size()) <= caps.cheeger_max_n) {
      s.guard("prop4.cheeger." + name, "eps_0 = h(X) |X(0)| / |X(1)|", [&] {
        const auto c = expansion_constants(x, 0, caps);
        const auto h = cheeger_exact(g, caps).h;
        const Rational rhs = h * static_cast<long>(x.count(0)) / static_cast<long>(x.count(1));
        s.add("prop4.cheeger." + name, "eps_0 = h(X) |X(0)| / |X(1)|", in, opt_rational(c.epsilon),
              rational_value(rhs), c.epsilon && *c.epsilon == rhs);
      });
    }
  }

  s.guard("norms.subadditive." + name, "||a+b|| <= ||a||+||b||, ||[a+b]|| <= ||[a]||+||[b]||", [&] {
    auto rng = s.rng_for("norms." + name);
    std::size_t bad = 0, trials = 0;
    for (int i = 0; i <= x.dim(); ++i) {
      for (int t = 0; t < 10; ++t) {
        const auto a = random_cochain(rng, x, i);
        const auto b = random_cochain(rng, x, i);
        const Cochain ab{i, a.support ^ b.support};
        const auto na = norms(x, a, caps), nb = norms(x, b, caps), nab = norms(x, ab, caps);
        ++trials;
        if (nab.norm > na.norm + nb.norm || nab.class_norm > na.class_norm + nb.class_norm ||
            nab.cocycle_coset_norm > na.cocycle_coset_norm + nb.cocycle_coset_norm || na.class_norm > na.norm ||
            na.cocycle_coset_norm > na.class_norm)
          ++bad;
      }
    }
    s.add("norms.subadditive." + name, "||a+b|| <= ||a||+||b||, ||[a+b]|| <= ||[a]||+||[b]||",
          in + ", " + std::to_string(trials) + " pairs", int_value(bad), integer_value(0), bad == 0,
          "lhs counts violating pairs");
  });

  const auto g = GraphView::from_complex(x);
  const std::size_t n = g.size();
  s.guard("spectrum.invariants." + name, "sum l = 0, sum l^2 = 2|E|, mult(0) = components", [&] {
    const auto spec = adjacency_spectrum(g, caps);
    const double tol = kSpectralTolerance * static_cast<double>(std::max<std::size_t>(n, 1));
    const double trace = std::accumulate(spec.begin(), spec.end(), 0.0);
    const double sq = std::accumulate(spec.begin(), spec.end(), 0.0, [](double a, double b) { return a + b * b; });
    const double kmax = spec.empty() ? 1.0 : std::max(1.0, std::abs(spec.front()));
    s.add("spectrum.trace." + name, "sum of adjacency eigenvalues = 0", in, float_value(trace), integer_value(0),
          std::abs(trace) <= tol);
    s.add("spectrum.square_sum." + name, "sum of squared eigenvalues = 2|E|", in, float_value(sq),
          int_value(2 * g.edge_count()), std::abs(sq - 2.0 * static_cast<double>(g.edge_count())) <= tol * kmax);
    const auto lap = laplacian_spectrum(g, caps);
    const auto zeros = static_cast<std::size_t>(
        std::count_if(lap.begin(), lap.end(), [](double v) { return std::abs(v) <= kZeroEigenTolerance; }));
    const bool nonneg = std::all_of(lap.begin(), lap.end(), [](double v) { return v >= -kZeroEigenTolerance; });
    s.add("spectrum.laplacian_zeros." + name, "multiplicity of Laplacian 0 = number of components", in,
          int_value(zeros), int_value(g.component_count()), zeros == g.component_count() && nonneg);
    const double res = eigen_residual(g, caps);
    s.add("spectrum.residual." + name, "||Av - lv|| <= 1e-8 ||v||", in, float_value(res), float_value(1e-8),
          res <= 1e-8);
  });

  if (n >= 2 && g.connected() && static_cast<int>(n) <= caps.cheeger_max_n) {
    s.guard("cheeger." + name, "h(X) >= l1/2", [&] {
      const auto ch = cheeger_exact(g, caps);
      const double l1 = *laplacian_gap(g, caps);
      s.add("cheeger.lower_bound." + name, "h(X) >= l1/2", in, rational_value(ch.h), float_value(l1 / 2),
            to_double(ch.h) >= l1 / 2 - kSpectralTolerance);
      if (n <= 20) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : x.faces(1)) edges.emplace_back(e[0], e[1]);
        const auto o = oracle::cheeger(n, edges);
        s.add("oracle.cheeger." + name, "h(X) and witness = direct subset scan", in, rational_value(ch.h),
              rational_value(o.h), ch.h == o.h && ch.witness == o.witness);
      }
    });
  }

  if (n >= 2 && n <= 12 && g.connected()) {
    s.guard("alon_milman." + name, "|E(W,W')| >= |W||W'|l1/n; h >= l1/2; E(W) = (k|W| - |E(W,W')|)/2", [&] {
      const double l1 = *laplacian_gap(g, caps);
      const Rational h = cheeger_exact(g, caps).h;
      std::size_t bad = 0, subsets = 0;
      for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) {
        BitVec w(n);
        for (std::size_t v = 0; v < n; ++v)
          if (m >> v & 1u) w.set(v);
        const auto r = alon_milman_report(g, w, l1, h, caps);
        ++subsets;
        const bool ok = r.cut_bound_ok && r.cheeger_bound_ok &&
                        (!r.internal_edges || (r.internal_edge_identity_ok && r.internal_bound_ok));
        if (!ok) ++bad;
      }
      s.add("alon_milman." + name, "|E(W,W')| >= |W||W'|l1/n; h >= l1/2; E(W) = (k|W| - |E(W,W')|)/2",
            in + ", " + std::to_string(subsets) + " subsets", int_value(bad), integer_value(0), bad == 0,
            "lhs counts violating subsets");
    });
  }

  if (n >= 2 && g.connected() && g.regular_degree()) {
    s.guard("ramanujan." + name, "|l| = k or |l| <= 2 sqrt(k-1)", [&] {
      const auto r = is_ramanujan_graph(g, caps);
      s.add_status("ramanujan." + name, "|l| = k or |l| <= 2 sqrt(k-1)", in, float_value(r.max_nontrivial),
                   float_value(r.bound), "info", r.ramanujan ? "Ramanujan" : "not Ramanujan");
    });
  }

  if (x.dim() == 2) {
    s.guard("triangle_identities." + name, "|d a| = t1+t3; sum link cuts = 2t1+2t2; t1+2t2+3t3 = sum c(e); r+s = 2|a|",
            [&] {
              auto rng = s.rng_for("triangles." + name);
              LinkCache links(x);
              std::size_t bad = 0;
              for (int t = 0; t < s.config.cochain_samples; ++t) {
                const auto a = random_cochain(rng, x, 1);
                const auto id = triangle_identities(links, a);
                const auto tt = thin_thick(links, a, s.config.params.epsilon);
                if (!id.coboundary_ok() || !id.link_cut_ok() || !id.degree_ok() || tt.r + tt.s != 2 * a.support.count())
                  ++bad;
              }
              s.add("triangle_identities." + name,
                    "|d a| = t1+t3; sum link cuts = 2t1+2t2; t1+2t2+3t3 = sum c(e); r+s = 2|a|",
                    in + ", " + std::to_string(s.config.cochain_samples) + " cochains", int_value(bad),
                    integer_value(0), bad == 0, "lhs counts cochains violating an identity");
            });
  }

  if (x.dim() >= 1) {
    for (int i = 1; i <= std::min(2, x.dim()); ++i) {
      const std::string id = "localmin." + name + ".i" + std::to_string(i);
      const char* anchor = "output locally minimal, ||out|| <= ||in||, out - in = d(gamma), steps <= ||in|| numerator";
      s.guard(id, anchor, [&] {
        auto rng = s.rng_for(id);
        std::size_t bad = 0;
        for (int t = 0; t < s.config.localmin_samples; ++t) {
          const auto a = random_cochain(rng, x, i);
          const auto r = locally_minimize(x, a, caps);
          const bool post = is_locally_minimal(x, r.minimized, caps).locally_minimal &&
                            oracle::locally_minimal(x, i, r.minimized.support) &&
                            norm(x, r.minimized) <= norm(x, a) &&
                            coboundary(x, r.gamma).support == (r.minimized.support ^ a.support) &&
                            static_cast<std::int64_t>(r.steps) <= norm_numerator(x, a);
          // a globally minimal representative is locally minimal
          const auto sp = cochain_spaces(x, i);
          const auto cm = min_weight_in_coset(a.support, sp.coboundary_basis.vectors, sp.weights, caps);
          const bool minimal_is_local = is_locally_minimal(x, Cochain{i, cm.argmin}, caps).locally_minimal;
          if (!post || !minimal_is_local) ++bad;
        }
        s.add(id, anchor, in + ", " + std::to_string(s.config.localmin_samples) + " cochains", int_value(bad),
              integer_value(0), bad == 0, "lhs counts cochains violating a postcondition");
      });
    }
  }

  if (x.dim() == 2) {
    s.guard("lemmas." + name, "isoperimetric lemma chain (generalized)", [&] {
      auto rng = s.rng_for("lemmas." + name);
      std::size_t bad = 0, evaluated = 0;
      for (int t = 0; t < s.config.localmin_samples; ++t) {
        const auto a = random_cochain(rng, x, 1);
        for (const auto& alpha : {a, locally_minimize(x, a, caps).minimized}) {
          const auto rep = dim2_lemma_suite(x, alpha, s.config.params, caps);
          ++evaluated;
          if (!rep.all_pass()) ++bad;
        }
      }
      s.add("lemmas." + name, "isoperimetric lemma chain (generalized)",
            in + ", " + std::to_string(evaluated) + " cochains", int_value(bad), integer_value(0), bad == 0,
            "lhs counts cochains with a failing applicable lemma");
    });
  }
}

bool bipartite(const GraphView& g) {
  std::vector<int> colour(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    bool ok = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      g.neighbours(v).for_each_set([&](std::size_t u) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          ok = false;
        }
      });
    }
    if (!ok) return false;
  }
  return true;
}

bool spectrum_matches(const std::vector<double>& got, std::vector<double> want) {
  std::sort(want.begin(), want.end(), std::greater<>());
  if (got.size() != want.size()) return false;
  for (std::size_t k = 0; k < got.size(); ++k)
    if (std::abs(got[k] - want[k]) > kSpectralTolerance) return false;
  return true;
}

Json spectrum_json(const std::vector<double>& spec) {
  Json j = Json::array();
  for (double v : spec) j.push_back(float_value(v));
  return j;
}

void family_checks(Suite& s) {
  const auto& caps = s.config.caps;

  s.guard("generators.rp2_6", "icosahedron / antipodes: f = (6,15,10), chi = 1, H^1 = H^2 = F2", [&] {
    const auto x = fixture("rp2_6");
    const std::int64_t chi = static_cast<std::int64_t>(x.count(0)) - static_cast<std::int64_t>(x.count(1)) +
                             static_cast<std::int64_t>(x.count(2));
    const bool ok = x.count(0) == 6 && x.count(1) == 15 && x.count(2) == 10 && chi == 1 && cohomology_dim(x, 0) == 0 &&
                    cohomology_dim(x, 1) == 1 && cohomology_dim(x, 2) == 1;
    s.add("generators.rp2_6", "icosahedron / antipodes: f = (6,15,10), chi = 1, H^1 = H^2 = F2",
          describe("rp2_6", x), integer_value(chi), integer_value(1), ok);
  });

  for (auto [q, m] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
    const std::string tag = "q" + std::to_string(q) + "m" + std::to_string(m);
    s.guard("generators.flag.counts." + tag, "#k-subspaces = [m choose k]_q", [&, q = q, m = m] {
      const auto t = subspace_table(q, m);
      Json l = Json::array(), r = Json::array();
      bool ok = true;
      for (int k = 1; k < m; ++k) {
        const auto got = static_cast<std::int64_t>(t.by_dim[static_cast<std::size_t>(k - 1)].size());
        const auto want = gaussian_binomial(m, k, q);
        l.push_back(integer_value(got));
        r.push_back(integer_value(want));
        ok = ok && got == want;
      }
      s.add("generators.flag.counts." + tag, "#k-subspaces = [m choose k]_q", tag, l, r, ok);
    });
  }

  s.guard("generators.flag.degrees.q2m4", "2-subspace vertices have degree 2(q+1), others 2(q^2+q+1)", [&] {
    const auto x = flag_complex(2, 4);
    const auto g = GraphView::from_complex(x);
    std::size_t planes6 = 0, others14 = 0, wrong = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const bool plane = x.labels()[v].rfind("2:", 0) == 0;
      if (plane && g.degree(v) == 6)
        ++planes6;
      else if (!plane && g.degree(v) == 14)
        ++others14;
      else
        ++wrong;
    }
    Json l, r;
    l["vertices"] = int_value(g.size());
    l["degree6"] = int_value(planes6);
    l["degree14"] = int_value(others14);
    r["vertices"] = integer_value(65);
    r["degree6"] = integer_value(35);
    r["degree14"] = integer_value(30);
    s.add("generators.flag.degrees.q2m4", "2-subspace vertices have degree 2(q+1), others 2(q^2+q+1)",
          describe("flag(2,4)", x), l, r, g.size() == 65 && planes6 == 35 && others14 == 30 && wrong == 0);
  });

  s.guard("generators.flag.links_bipartite.q2m4", "every vertex link of flag(2,4) is bipartite", [&] {
    const auto x = flag_complex(2, 4);
    LinkCache links(x);
    std::size_t bad = 0;
    for (std::size_t v = 0; v < x.num_vertices(); ++v)
      if (!bipartite(GraphView::from_complex(links.at(v).complex))) ++bad;
    s.add("generators.flag.links_bipartite.q2m4", "every vertex link of flag(2,4) is bipartite",
          describe("flag(2,4)", x), int_value(bad), integer_value(0), bad == 0);
  });

  s.guard("generators.flag.fano_isomorphic", "fano_incidence ~ flag(2,3)", [&] {
    const bool iso = are_isomorphic(fixture("fano_incidence"), flag_complex(2, 3));
    s.add("generators.flag.fano_isomorphic", "fano_incidence ~ flag(2,3)", "flag(2,3), fano_incidence", iso, true,
          iso);
  });

  s.guard("spectrum.flag_q2m3", "spectrum of flag(2,3) = {3, sqrt2 x6, -sqrt2 x6, -3}", [&] {
    const auto spec = adjacency_spectrum(GraphView::from_complex(flag_complex(2, 3)), caps);
    std::vector<double> want{3, -3};
    for (int k = 0; k < 6; ++k) {
      want.push_back(std::sqrt(2.0));
      want.push_back(-std::sqrt(2.0));
    }
    s.add("spectrum.flag_q2m3", "spectrum of flag(2,3) = {3, sqrt2 x6, -sqrt2 x6, -3}", "flag(2,3)",
          spectrum_json(spec), spectrum_json([&] {
            auto w = want;
            std::sort(w.begin(), w.end(), std::greater<>());
            return w;
          }()),
          spectrum_matches(spec, want));
  });

  struct Known {
    const char* name;
    SimplicialComplex x;
    std::vector<double> spectrum;
  };
  const std::vector<Known> known{
      {"cycle_4", fixture("cycle_4"), {2, 0, 0, -2}},
      {"complete_4_1", fixture("complete_4_1"), {3, -1, -1, -1}},
      {"petersen", fixture("petersen"), {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}},
  };
  for (const auto& k : known) {
    const std::string id = std::string("spectrum.known.") + k.name;
    s.guard(id, "adjacency spectrum", [&] {
      const auto spec = adjacency_spectrum(GraphView::from_complex(k.x), caps);
      auto want = k.spectrum;
      std::sort(want.begin(), want.end(), std::greater<>());
      s.add(id, "adjacency spectrum", k.name, spectrum_json(spec), spectrum_json(want), spectrum_matches(spec, want));
    });
    s.guard("ramanujan.known." + std::string(k.name), "|l| = k or |l| <= 2 sqrt(k-1)", [&] {
      const auto r = is_ramanujan_graph(GraphView::from_complex(k.x), caps);
      s.add("ramanujan.known." + std::string(k.name), "|l| = k or |l| <= 2 sqrt(k-1)", k.name,
            float_value(r.max_nontrivial), float_value(r.bound), r.ramanujan);
    });
  }

  s.guard("spectrum.random_graphs", "multiplicity of Laplacian 0 = number of components", [&] {
    auto rng = s.rng_for("random_graphs");
    std::size_t bad = 0;
    for (int t = 0; t < s.config.random_graphs; ++t) {
      const std::size_t n = 2 + rng() % 15;
      const double p = static_cast<double>(rng() % 60) / 100.0;
      const auto g = GraphView::from_edges(n, random_graph(rng, n, p));
      const auto lap = laplacian_spectrum(g, caps);
      const auto zeros = static_cast<std::size_t>(
          std::count_if(lap.begin(), lap.end(), [](double v) { return std::abs(v) <= kZeroEigenTolerance; }));
      if (zeros != g.component_count()) ++bad;
    }
    s.add("spectrum.random_graphs", "multiplicity of Laplacian 0 = number of components",
          std::to_string(s.config.random_graphs) + " G(n,p) graphs", int_value(bad), integer_value(0), bad == 0);
  });

  s.guard("delta_squared.random_complexes", "d_{i+1} d_i = 0", [&] {
    auto rng = s.rng_for("random_complexes");
    std::size_t bad = 0;
    for (int t = 0; t < s.config.random_complexes; ++t)
      if (delta_square_defect(random_pure_complex(rng, 12, 3)) != 0) ++bad;
    s.add("delta_squared.random_complexes", "d_{i+1} d_i = 0",
          std::to_string(s.config.random_complexes) + " random pure complexes, d <= 3, n <= 12", int_value(bad),
          integer_value(0), bad == 0);
  });

  s.guard("generators.cayley.s3", "Cay(S3, transpositions) = K_{3,3}, triangle-free", [&] {
    const auto c = cayley_clique_complex(3, {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}, 2, caps);
    const auto g = GraphView::from_complex(c.complex);
    const bool ok = c.group_order == 6 && c.dimension == 1 && c.complex.count(1) == 9 && g.regular_degree() == 3u &&
                    bipartite(g);
    s.add("generators.cayley.s3", "Cay(S3, transpositions) = K_{3,3}, triangle-free", "S3, D=2",
          integer_value(c.dimension), integer_value(1), ok);
  });

  s.guard("generators.cayley.z5", "Cay(Z5, {+-1, +-2}) = K5 with C(5,3) triangles", [&] {
    std::vector<std::vector<int>> gens;
    for (int k : {1, 2, 3, 4}) {
      std::vector<int> p(5);
      for (int x = 0; x < 5; ++x) p[static_cast<std::size_t>(x)] = (x + k) % 5;
      gens.push_back(p);
    }
    const auto c = cayley_clique_complex(5, gens, 2, caps);
    s.add("generators.cayley.z5", "Cay(Z5, {+-1, +-2}) = K5 with C(5,3) triangles", "Z5, D=2",
          int_value(c.complex.count(2)), integer_value(10),
          c.group_order == 5 && c.dimension == 2 && c.complex.count(2) == 10 && c.pure());
  });

  s.guard("generators.cayley.vertex_transitive", "all vertex links of a Cayley clique complex are isomorphic", [&] {
    // S4 generated by the transpositions (01), (12), (23) and the 4-cycles (0123)^{+-1}
    const auto c = cayley_clique_complex(
        4, {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}, {1, 2, 3, 0}, {3, 0, 1, 2}}, 2, caps);
    std::size_t bad = 0;
    const auto first = link(c.complex, Face{0});
    for (std::size_t v = 1; v < c.complex.num_vertices(); ++v)
      if (!are_isomorphic(first.complex, link(c.complex, Face{static_cast<int>(v)}).complex)) ++bad;
    s.add("generators.cayley.vertex_transitive", "all vertex links of a Cayley clique complex are isomorphic",
          "S4, 5 generators, D=2", int_value(bad), integer_value(0), bad == 0);
  });

  s.guard("systole.rp2_6", "systole_1 = min over Z^1 \\ B^1 by exhaustive enumeration", [&] {
    const auto x = fixture("rp2_6");
    const auto sys = systole(x, 1, caps);
    const auto o = oracle::expansion(x, 1);
    const std::optional<Rational> got = sys ? std::optional<Rational>(sys->norm) : std::nullopt;
    s.add("systole.rp2_6", "systole_1 = min over Z^1 \\ B^1 by exhaustive enumeration", "rp2_6, 2^15 cochains",
          opt_rational(got), opt_rational(o.systole), got.has_value() && got == o.systole && cohomology_dim(x, 1) == 1);

    const auto cert = certify_gromov(x, s.config.certify_mu, s.config.certify_eta, caps);
    s.add("certify.rp2_6", "mu_i <= mu and ||a|| >= eta on Z^i \\ B^i", "rp2_6, mu = " +
          to_fraction_string(s.config.certify_mu) + ", eta = " + to_fraction_string(s.config.certify_eta),
          to_json(x, cert), rational_value(s.config.certify_eta), cert.ok());

    // the systolic condition flips exactly at eta = systole_1
    const Rational big_mu(1000000);
    const bool at = certify_gromov(x, big_mu, *got, caps).systole_ok();
    const bool above = certify_gromov(x, big_mu, *got + Rational(1, 1000000), caps).systole_ok();
    s.add("certify.rp2_6.threshold", "systolic condition holds iff eta <= systole_1", "rp2_6", rational_value(*got),
          rational_value(*got), at && !above);
  });

  s.guard("coset.mitm_vs_exhaustive", "meet-in-the-middle = Gray enumeration = plain enumeration", [&] {
    auto rng = s.rng_for("coset");
    std::size_t bad = 0;
    for (int t = 0; t < s.config.coset_instances; ++t) {
      const std::size_t len = 24 + rng() % 40;
      const std::size_t k = 1 + rng() % 20;
      EchelonSpace e(len);
      std::vector<BitVec> basis;
      while (basis.size() < k) {
        BitVec v(len);
        for (std::size_t j = 0; j < len; ++j)
          if (rng() % 3 == 0) v.set(j);
        if (v.any() && e.insert(v)) basis.push_back(v);
      }
      BitVec target(len);
      for (std::size_t j = 0; j < len; ++j)
        if (rng() & 1u) target.set(j);
      std::vector<std::int64_t> w(len);
      for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 9);
      const auto a = min_weight_in_coset(target, basis, w, caps, CosetStrategy::MeetInTheMiddle);
      const auto b = min_weight_in_coset(target, basis, w, caps, CosetStrategy::Exhaustive);
      bool ok = a.weight == b.weight && a.argmin == b.argmin;
      if (k <= 16) {
        const auto o = oracle::min_weight_in_coset(target, basis, w);
        ok = ok && o.weight == a.weight && o.argmin == a.argmin;
      }
      if (!ok) ++bad;
    }
    s.add("coset.mitm_vs_exhaustive", "meet-in-the-middle = Gray enumeration = plain enumeration",
          std::to_string(s.config.coset_instances) + " instances, dim B <= 20", int_value(bad), integer_value(0),
          bad == 0);
  });

  s.guard("overlap.quadrilateral", "diagonal crossing lies in all four closed triangles", [&] {
    const auto x = complete_complex(4, 2);
    PointConfig p{2, {{"0", {0, 0}}, {"1", {1, 0}}, {"2", {1, 1}}, {"3", {0, 1}}}};
    const auto r = geometric_overlap_2d(x, p);
    s.add("overlap.quadrilateral", "diagonal crossing lies in all four closed triangles", "complete_4_2 on unit square",
          rational_value(r.fraction), rational_value(1), r.max_depth == 4 && r.fraction == 1);
  });

  s.guard("overlap.collinear", "collinear images reduce to interval stabbing", [&] {
    const auto x = complete_complex(4, 2);
    PointConfig p{2, {{"0", {0, 0}}, {"1", {3, 0}}, {"2", {1, 0}}, {"3", {7, 0}}}};
    const auto r = geometric_overlap_2d(x, p);
    std::vector<std::pair<Rational, Rational>> intervals;
    const std::vector<int> xs{0, 3, 1, 7};
    for (const auto& f : x.facets()) {
      int lo = 100, hi = -100;
      for (int v : f) {
        lo = std::min(lo, xs[static_cast<std::size_t>(v)]);
        hi = std::max(hi, xs[static_cast<std::size_t>(v)]);
      }
      intervals.emplace_back(lo, hi);
    }
    const auto want = oracle::interval_stabbing(intervals);
    s.add("overlap.collinear", "collinear images reduce to interval stabbing", "complete_4_2 on a line",
          integer_value(r.max_depth), integer_value(want), r.max_depth == want);
  });

  s.guard("overlap.oracle", "exact planar depth = grid + candidate oracle; Monte Carlo <= exact", [&] {
    auto rng = s.rng_for("overlap");
    std::size_t bad = 0;
    for (int t = 0; t < s.config.overlap_instances; ++t) {
      const int n = 5 + static_cast<int>(rng() % 3);
      const auto x = complete_complex(n, 2);
      PointConfig p{2, {}};
      for (int v = 0; v < n; ++v)
        p.coords[std::to_string(v)] = {Rational(static_cast<long>(rng() % 11)), Rational(static_cast<long>(rng() % 11))};
      const auto exact = geometric_overlap_2d(x, p);
      const auto ref = oracle::planar_overlap(x, p);
      const auto mc = geometric_overlap_mc(x, p, 50, rng());
      if (exact.max_depth != ref || mc.best.max_depth > exact.max_depth) ++bad;
    }
    s.add("overlap.oracle", "exact planar depth = grid + candidate oracle; Monte Carlo <= exact",
          std::to_string(s.config.overlap_instances) + " instances with 5-7 points", int_value(bad), integer_value(0),
          bad == 0);
  });

  s.guard("overlap.first_selection", "observed overlap fraction vs 2/9", [&] {
    auto rng = s.rng_for("first_selection");
    const auto x = complete_complex(7, 2);
    std::optional<Rational> lowest;
    for (int t = 0; t < 3; ++t) {
      PointConfig p{2, {}};
      for (int v = 0; v < 7; ++v)
        p.coords[std::to_string(v)] = {Rational(static_cast<long>(rng() % 101)),
                                       Rational(static_cast<long>(rng() % 101))};
      const auto r = geometric_overlap_2d(x, p);
      if (!lowest || r.fraction < *lowest) lowest = r.fraction;
    }
    s.add_status("overlap.first_selection", "observed overlap fraction vs 2/9", "3 random 7-point configurations",
                 rational_value(*lowest), rational_value(Rational(2, 9)), "info",
                 "report only: the constant is asymptotic");
  });
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.fixtures.empty()) throw Error(ErrorCode::ConfigError, "fixture list is empty");
  std::vector<std::pair<std::string, SimplicialComplex>> fixtures;
  for (const auto& name : config.fixtures) {
    try {
      fixtures.emplace_back(name, fixture(name));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.what());
    }
  }
  Suite s(config);
  for (const auto& [name, x] : fixtures) fixture_checks(s, name, x);
  family_checks(s);

  SuiteReport rep;
  rep.seed = config.seed;
  rep.checks = std::move(s.checks);
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const SuiteCheck& a, const SuiteCheck& b) { return a.check_id < b.check_id; });
  return rep;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["tool"] = "hdx";
  j["version"] = r.version;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  Json summary;
  for (const char* st : {"pass", "fail", "skipped", "info"}) summary[st] = r.count(st);
  j["summary"] = summary;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["check_id"] = c.check_id;
    cj["anchor"] = c.anchor;
    cj["inputs"] = c.inputs;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["status"] = c.status;
    cj["pass"] = c.status == "fail" ? Json(false) : (c.status == "pass" ? Json(true) : Json(nullptr));
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Flattens a tagged value; structured values fall back to compact JSON.
std::pair<std::string, std::string> flat(const Json& v) {
  if (v.is_null()) return {"", ""};
  if (v.is_object() && v.contains("exact") && v.contains("value"))
    return {v["value"].get<std::string>(), v["exact"].get<std::string>()};
  if (v.is_boolean()) return {v.get<bool>() ? "true" : "false", "boolean"};
  return {v.dump(), "structured"};
}

}  // namespace

std::string to_csv(const SuiteReport& r) {
  std::ostringstream out;
  out << "check_id,anchor,status,lhs,rhs,exactness,inputs,note\n";
  for (const auto& c : r.checks) {
    const auto [lv, lt] = flat(c.lhs);
    const auto [rv, rt] = flat(c.rhs);
    const std::string tag = lt.empty() ? rt : lt;
    out << csv_field(c.check_id) << ',' << csv_field(c.anchor) << ',' << c.status << ',' << csv_field(lv) << ','
        << csv_field(rv) << ',' << csv_field(tag) << ',' << csv_field(c.inputs) << ',' << csv_field(c.note) << '\n';
  }
  return out.str();
}

}  // namespace hdx
