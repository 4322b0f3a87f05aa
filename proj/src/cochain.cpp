#include "hdx/cochain.hpp"

#include "hdx/errors.hpp"
#include "hdx/spectral.hpp"

#include <algorithm>

namespace hdx {

namespace {

void require_dim(const SimplicialComplex& x, int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi)
    throw Error(ErrorCode::DimensionOutOfRange, std::string(what) + ": dimension " + std::to_string(i) +
                                                    " outside " + std::to_string(lo) + ".." + std::to_string(hi) +
                                                    " for a " + std::to_string(x.dim()) + "-complex");
}

void require_cochain(const SimplicialComplex& x, const Cochain& a) {
  if (!x.has_dim(a.dim))
    throw Error(ErrorCode::DimensionOutOfRange, "cochain dimension " + std::to_string(a.dim));
  if (a.support.size() != x.count(a.dim)) throw Error(ErrorCode::BadParams, "cochain length does not match X(i)");
}

std::vector<std::int64_t> degrees_of(const SimplicialComplex& x, int i) {
  auto span = x.facet_degrees(i);
  return {span.begin(), span.end()};
}

Rational ratio(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

void check_classes(std::size_t bits, const SearchCaps& caps, const char* what) {
  if (static_cast<int>(bits) > caps.class_log2)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::string(what) + ": 2^" + std::to_string(bits) + " classes exceed the class cap");
}

struct RatioScan {
  bool found = false;
  std::int64_t delta_num = 0;  // Σ c over δα
  std::int64_t coset_num = 0;  // Σ c over the coset minimum
  BitVec witness;
};

// min over α ∉ S of ‖δα‖ / ‖α + S‖, one canonical representative per class.
RatioScan scan_coboundary_ratio(const SimplicialComplex& x, int i, const SubspaceBasis& sub,
                                const std::vector<BitVec>& columns, const std::vector<std::int64_t>& w,
                                const std::vector<std::int64_t>& w_next, const SearchCaps& caps) {
  EchelonSpace echelon(sub);
  const auto free = echelon.free_coordinates();
  check_classes(free.size(), caps, "expansion scan");
  RatioScan best;
  BitVec alpha(x.count(i));
  BitVec delta(x.count(i + 1));
  std::int64_t delta_num = 0;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto j = static_cast<std::size_t>(std::countr_zero(s));
    const std::size_t coord = free[j];
    columns[coord].for_each_set([&](std::size_t p) { delta_num += delta.get(p) ? -w_next[p] : w_next[p]; });
    delta ^= columns[coord];
    alpha.flip(coord);
    const auto cm = min_weight_in_coset(alpha, sub.vectors, w, caps);
    // delta_num / coset < best.delta_num / best.coset
    if (!best.found || static_cast<__int128>(delta_num) * best.coset_num <
                           static_cast<__int128>(best.delta_num) * cm.weight) {
      best.found = true;
      best.delta_num = delta_num;
      best.coset_num = cm.weight;
      best.witness = cm.argmin;
    }
  }
  return best;
}

struct MuScan {
  bool found = false;
  std::int64_t filling_num = 0;
  std::int64_t beta_num = 0;
  BitVec beta;
};

// max over 0 ≠ β ∈ B^{i+1} of min{‖α‖ : δα = β} / ‖β‖.
MuScan scan_cofilling(const SimplicialComplex& x, int i, const Reduction& red, const std::vector<std::int64_t>& w,
                      const std::vector<std::int64_t>& w_next, const SearchCaps& caps) {
  check_classes(red.rank, caps, "cofilling scan");
  MuScan best;
  BitVec beta(x.count(i + 1));
  BitVec pre(x.count(i));
  std::int64_t beta_num = 0;
  const std::uint64_t total = std::uint64_t{1} << red.rank;
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto j = static_cast<std::size_t>(std::countr_zero(s));
    const BitVec& col = red.image.vectors[j];
    col.for_each_set([&](std::size_t p) { beta_num += beta.get(p) ? -w_next[p] : w_next[p]; });
    beta ^= col;
    pre.flip(red.pivot_columns[j]);
    const auto cm = min_weight_in_coset(pre, red.kernel.vectors, w, caps);
    // cm / beta_num > best.filling / best.beta
    if (!best.found || static_cast<__int128>(cm.weight) * best.beta_num >
                           static_cast<__int128>(best.filling_num) * beta_num) {
      best.found = true;
      best.filling_num = cm.weight;
      best.beta_num = beta_num;
      best.beta = beta;
    }
  }
  return best;
}

}  // namespace

F2Matrix coboundary_matrix(const SimplicialComplex& x, int i) {
  require_dim(x, i, -1, x.dim() - 1, "coboundary");
  F2Matrix m(x.count(i + 1), x.count(i));
  for (std::size_t r = 0; r < x.count(i + 1); ++r)
    for (std::size_t s : x.subfaces(i + 1, r)) m.set(r, s);
  return m;
}

std::vector<BitVec> coboundary_columns(const SimplicialComplex& x, int i) {
  require_dim(x, i, -1, x.dim() - 1, "coboundary");
  std::vector<BitVec> cols(x.count(i), BitVec(x.count(i + 1)));
  for (std::size_t c = 0; c < x.count(i); ++c)
    for (std::size_t r : x.cofaces(i, c)) cols[c].set(r);
  return cols;
}

Cochain coboundary(const SimplicialComplex& x, const Cochain& alpha) {
  require_cochain(x, alpha);
  require_dim(x, alpha.dim, -1, x.dim() - 1, "coboundary");
  Cochain out = Cochain::zero(x, alpha.dim + 1);
  alpha.support.for_each_set([&](std::size_t c) {
    for (std::size_t r : x.cofaces(alpha.dim, c)) out.support.flip(r);
  });
  return out;
}

std::int64_t norm_numerator(const SimplicialComplex& x, const Cochain& alpha) {
  require_cochain(x, alpha);
  std::int64_t s = 0;
  alpha.support.for_each_set([&](std::size_t j) { s += x.facet_degree(alpha.dim, j); });
  return s;
}

Rational norm(const SimplicialComplex& x, const Cochain& alpha) {
  return ratio(norm_numerator(x, alpha), x.weight_denominator(alpha.dim));
}

CochainSpaces cochain_spaces(const SimplicialComplex& x, int i) {
  require_dim(x, i, 0, x.dim(), "cochain spaces");
  CochainSpaces sp;
  sp.dim = i;
  auto below = reduce(coboundary_matrix(x, i - 1));
  sp.coboundary_basis = std::move(below.image);
  sp.coboundary_sources = std::move(below.pivot_columns);
  if (i == x.dim()) {
    sp.cocycle_basis.ambient = x.count(i);
    for (std::size_t j = 0; j < x.count(i); ++j) sp.cocycle_basis.vectors.push_back(BitVec::unit(x.count(i), j));
  } else {
    sp.cocycle_basis = reduce(coboundary_matrix(x, i)).kernel;
  }
  sp.weights = degrees_of(x, i);
  return sp;
}

Norms norms(const SimplicialComplex& x, const Cochain& alpha, const SearchCaps& caps) {
  require_cochain(x, alpha);
  require_dim(x, alpha.dim, 0, x.dim(), "norms");
  const auto sp = cochain_spaces(x, alpha.dim);
  const std::int64_t den = x.weight_denominator(alpha.dim);
  Norms out;
  out.support_size = alpha.support.count();
  out.norm = ratio(norm_numerator(x, alpha), den);
  out.class_norm = ratio(min_weight_in_coset(alpha.support, sp.coboundary_basis.vectors, sp.weights, caps).weight, den);
  out.cocycle_coset_norm =
      ratio(min_weight_in_coset(alpha.support, sp.cocycle_basis.vectors, sp.weights, caps).weight, den);
  return out;
}

int cohomology_dim(const SimplicialComplex& x, int i) {
  require_dim(x, i, 0, x.dim(), "cohomology");
  const std::size_t rank_below = reduce(coboundary_matrix(x, i - 1)).rank;
  const std::size_t dim_z = i == x.dim() ? x.count(i) : x.count(i) - reduce(coboundary_matrix(x, i)).rank;
  return static_cast<int>(dim_z - rank_below);
}

ExpansionConstants expansion_constants(const SimplicialComplex& x, int i, const SearchCaps& caps) {
  require_dim(x, i, 0, x.dim() - 1, "expansion constants");
  const auto sp = cochain_spaces(x, i);
  const auto columns = coboundary_columns(x, i);
  const auto w_next = degrees_of(x, i + 1);
  const std::int64_t den = x.weight_denominator(i);
  const std::int64_t den_next = x.weight_denominator(i + 1);

  ExpansionConstants out;
  out.dim = i;
  out.dim_h = sp.dim_h();

  const auto eps = scan_coboundary_ratio(x, i, sp.coboundary_basis, columns, sp.weights, w_next, caps);
  if (eps.found) {
    out.epsilon = ratio(eps.delta_num, den_next) / ratio(eps.coset_num, den);
    out.epsilon_witness = Cochain{i, eps.witness};
  }
  const auto eps_t = scan_coboundary_ratio(x, i, sp.cocycle_basis, columns, sp.weights, w_next, caps);
  if (eps_t.found) {
    out.epsilon_tilde = ratio(eps_t.delta_num, den_next) / ratio(eps_t.coset_num, den);
    out.epsilon_tilde_witness = Cochain{i, eps_t.witness};
  }
  const auto red = reduce(coboundary_matrix(x, i));
  const auto mu = scan_cofilling(x, i, red, sp.weights, w_next, caps);
  if (mu.found) {
    out.mu = ratio(mu.filling_num, den) / ratio(mu.beta_num, den_next);
    out.mu_witness = Cochain{i + 1, mu.beta};
  }
  return out;
}

std::optional<Systole> systole(const SimplicialComplex& x, int i, const SearchCaps& caps) {
  require_dim(x, i, 0, x.dim() - 1, "systole");
  const auto sp = cochain_spaces(x, i);
  EchelonSpace echelon(sp.coboundary_basis);
  std::vector<BitVec> classes;
  for (const auto& z : sp.cocycle_basis.vectors)
    if (echelon.insert(z)) classes.push_back(z);
  if (classes.empty()) return std::nullopt;
  check_classes(classes.size(), caps, "systole scan");

  std::int64_t best_w = 0;
  BitVec best_v;
  bool found = false;
  BitVec h(x.count(i));
  const std::uint64_t total = std::uint64_t{1} << classes.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    h ^= classes[static_cast<std::size_t>(std::countr_zero(s))];
    const auto cm = min_weight_in_coset(h, sp.coboundary_basis.vectors, sp.weights, caps);
    if (!found || cm.weight < best_w || (cm.weight == best_w && BitVec::lex_less(cm.argmin, best_v))) {
      found = true;
      best_w = cm.weight;
      best_v = cm.argmin;
    }
  }
  Systole out{ratio(best_w, x.weight_denominator(i)), best_v.count(), Cochain{i, best_v}};
  return out;
}

bool GromovCertificate::cofilling_ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const Level& l) { return l.cofilling_ok; });
}

bool GromovCertificate::systole_ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const Level& l) { return l.systole_ok; });
}

GromovCertificate certify_gromov(const SimplicialComplex& x, const Rational& mu, const Rational& eta,
                                 const SearchCaps& caps) {
  if (sgn(mu) <= 0 || sgn(eta) <= 0) throw Error(ErrorCode::BadParams, "mu and eta must be positive");
  GromovCertificate cert{mu, eta, {}};
  for (int i = 0; i <= x.dim() - 1; ++i) {
    GromovCertificate::Level level;
    level.dim = i;
    const auto red = reduce(coboundary_matrix(x, i));
    const auto w = degrees_of(x, i);
    const auto w_next = degrees_of(x, i + 1);
    const auto scan = scan_cofilling(x, i, red, w, w_next, caps);
    if (scan.found) {
      level.mu_i = ratio(scan.filling_num, x.weight_denominator(i)) /
                   ratio(scan.beta_num, x.weight_denominator(i + 1));
      level.cofilling_ok = *level.mu_i <= mu;
      if (!level.cofilling_ok) level.cofilling_witness = Cochain{i + 1, scan.beta};
    }
    if (auto s = systole(x, i, caps)) {
      level.systole_i = s->norm;
      level.systole_ok = s->norm >= eta;
      if (!level.systole_ok) level.systole_witness = s->witness;
    }
    cert.levels.push_back(std::move(level));
  }
  return cert;
}

ExpansionReport expansion_report(const SimplicialComplex& x, const ReportOptions& options) {
  ExpansionReport rep;
  rep.dim = x.dim();
  for (int i = -1; i <= x.dim(); ++i) rep.f_vector.push_back(x.count(i));
  for (int i = 0; i <= x.dim(); ++i) rep.cohomology.push_back(cohomology_dim(x, i));
  std::vector<int> dims;
  if (options.only_dim) {
    require_dim(x, *options.only_dim, 0, x.dim() - 1, "report");
    dims.push_back(*options.only_dim);
  } else {
    for (int i = 0; i <= x.dim() - 1; ++i) dims.push_back(i);
  }
  for (int i : dims) {
    rep.constants.push_back(expansion_constants(x, i, options.caps));
    rep.systoles.push_back(systole(x, i, options.caps));
  }
  if (options.spectral && x.dim() >= 0) {
    const auto g = GraphView::from_complex(x);
    SpectralSummary s;
    s.vertices = g.size();
    s.edges = g.edge_count();
    s.components = g.component_count();
    s.regular_degree = g.regular_degree();
    if (g.size() <= options.caps.spectrum_max_n) {
      s.adjacency_spectrum = adjacency_spectrum(g, options.caps);
      s.laplacian_gap = laplacian_gap(g, options.caps);
    }
    rep.spectral = std::move(s);
  }
  return rep;
}

}  // namespace hdx
