#include "hdx/spectral.hpp"

#include "hdx/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

namespace hdx {

GraphView GraphView::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GraphView g;
  g.adj_.assign(n, BitVec(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::BadParams, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::BadParams, "self-loop");
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  g.degree_.resize(n);
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n; ++v) {
    g.degree_[v] = g.adj_[v].count();
    twice += g.degree_[v];
  }
  g.edges_ = twice / 2;
  return g;
}

GraphView GraphView::from_complex(const SimplicialComplex& x) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : x.faces(1)) edges.emplace_back(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]));
  return from_edges(x.num_vertices(), edges);
}

std::optional<std::size_t> GraphView::regular_degree() const {
  if (degree_.empty()) return std::nullopt;
  if (std::all_of(degree_.begin(), degree_.end(), [&](std::size_t d) { return d == degree_[0]; })) return degree_[0];
  return std::nullopt;
}

std::size_t GraphView::component_count() const {
  const std::size_t n = size();
  std::vector<char> seen(n, 0);
  std::size_t comps = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      adj_[v].for_each_set([&](std::size_t u) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
  }
  return comps;
}

std::size_t GraphView::cut_size(const BitVec& w) const {
  const BitVec out = w.complement();
  std::size_t cut = 0;
  w.for_each_set([&](std::size_t v) { cut += (adj_[v] & out).count(); });
  return cut;
}

std::size_t GraphView::internal_edges(const BitVec& w) const {
  std::size_t twice = 0;
  w.for_each_set([&](std::size_t v) { twice += (adj_[v] & w).count(); });
  return twice / 2;
}

namespace {

Eigen::MatrixXd dense_adjacency(const GraphView& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t v = 0; v < g.size(); ++v)
    g.neighbours(v).for_each_set([&](std::size_t u) { a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0; });
  return a;
}

void check_size(const GraphView& g, const SearchCaps& caps) {
  if (g.size() > caps.spectrum_max_n)
    throw Error(ErrorCode::TooLarge, "graph with " + std::to_string(g.size()) + " vertices exceeds the spectrum cap");
}

}  // namespace

std::vector<double> adjacency_spectrum(const GraphView& g, const SearchCaps& caps) {
  check_size(g, caps);
  if (g.size() == 0) return {};
  // Householder tridiagonalisation followed by implicit symmetric QR.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(g), Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> laplacian_spectrum(const GraphView& g, const SearchCaps& caps) {
  check_size(g, caps);
  if (g.size() == 0) return {};
  Eigen::MatrixXd l = -dense_adjacency(g);
  for (std::size_t v = 0; v < g.size(); ++v)
    l(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = static_cast<double>(g.degree(v));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> laplacian_gap(const GraphView& g, const SearchCaps& caps) {
  for (double ev : laplacian_spectrum(g, caps))
    if (ev > kZeroEigenTolerance) return ev;
  return std::nullopt;
}

double eigen_residual(const GraphView& g, const SearchCaps& caps) {
  check_size(g, caps);
  if (g.size() == 0) return 0.0;
  const Eigen::MatrixXd a = dense_adjacency(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const Eigen::VectorXd v = solver.eigenvectors().col(k);
    const double r = (a * v - solver.eigenvalues()(k) * v).norm() / v.norm();
    worst = std::max(worst, r);
  }
  return worst;
}

CheegerResult cheeger_exact(const GraphView& g, const SearchCaps& caps) {
  const std::size_t n = g.size();
  if (n < 2) throw Error(ErrorCode::BadParams, "Cheeger constant needs at least two vertices");
  if (static_cast<int>(n) > caps.cheeger_max_n)
    throw Error(ErrorCode::TooLarge, "graph with " + std::to_string(n) + " vertices exceeds the Cheeger cap");
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    g.neighbours(v).for_each_set([&](std::size_t u) { adj[v] |= std::uint64_t{1} << u; });

  // W ranges over nonempty subsets of the first n-1 vertices (vertex n-1 always
  // on the other side), covering every cut exactly once. Gray code keeps
  // the cut size incremental.
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t w = 0;
  std::int64_t cut = 0;
  std::int64_t best_cut = -1;
  std::int64_t best_side = 1;
  std::vector<std::uint64_t> best_sides;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    const std::uint64_t bit = std::uint64_t{1} << v;
    const auto inside = static_cast<std::int64_t>(std::popcount(adj[v] & w));
    const auto deg = static_cast<std::int64_t>(std::popcount(adj[v]));
    if (w & bit)
      cut -= deg - 2 * inside;
    else
      cut += deg - 2 * inside;
    w ^= bit;
    const auto size = static_cast<std::int64_t>(std::popcount(w));
    const std::int64_t side = std::min<std::int64_t>(size, static_cast<std::int64_t>(n) - size);
    if (best_cut < 0 || cut * best_side < best_cut * side) {
      best_cut = cut;
      best_side = side;
      best_sides.clear();
    }
    if (cut * best_side == best_cut * side) {
      const std::uint64_t other = all & ~w;
      const int pw = std::popcount(w), po = std::popcount(other);
      if (pw < po)
        best_sides.push_back(w);
      else if (po < pw)
        best_sides.push_back(other);
      else {
        best_sides.push_back(w);
        best_sides.push_back(other);
      }
    }
  }
  auto as_list = [&](std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) out.push_back(v);
    return out;
  };
  std::vector<std::size_t> witness = as_list(best_sides.front());
  for (auto mask : best_sides) {
    auto cand = as_list(mask);
    if (cand < witness) witness = std::move(cand);
  }
  return {make_rational(best_cut, best_side), witness};
}

AlonMilmanReport alon_milman_report(const GraphView& g, const BitVec& w, std::optional<double> lambda1,
                                    std::optional<Rational> cheeger, const SearchCaps& caps) {
  if (w.size() != g.size()) throw Error(ErrorCode::InvalidSubset, "subset mask length does not match the graph");
  const std::size_t k = w.count();
  if (k == 0 || k == g.size()) throw Error(ErrorCode::InvalidSubset, "W must be a nonempty proper subset");
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "Alon-Milman bounds need a connected graph");
  if (!lambda1) lambda1 = laplacian_gap(g, caps);
  if (!cheeger) cheeger = cheeger_exact(g, caps).h;

  AlonMilmanReport r;
  r.w_size = k;
  r.complement_size = g.size() - k;
  r.cut = g.cut_size(w);
  r.lambda1 = *lambda1;
  const double n = static_cast<double>(g.size());
  r.cut_rhs = static_cast<double>(r.w_size) * static_cast<double>(r.complement_size) / n * r.lambda1;
  r.cut_bound_ok = static_cast<double>(r.cut) >= r.cut_rhs - kSpectralTolerance;
  r.cheeger = *cheeger;
  r.cheeger_bound_ok = to_double(r.cheeger) >= r.lambda1 / 2.0 - kSpectralTolerance;
  if (auto deg = g.regular_degree()) {
    r.internal_edges = g.internal_edges(w);
    r.internal_identity_rhs =
        make_rational(static_cast<std::int64_t>(*deg * k) - static_cast<std::int64_t>(r.cut), 2);
    r.internal_edge_identity_ok = Rational(static_cast<long>(*r.internal_edges)) == *r.internal_identity_rhs;
    r.internal_bound_rhs =
        0.5 * (static_cast<double>(*deg) - static_cast<double>(r.complement_size) / n * r.lambda1) *
        static_cast<double>(k);
    r.internal_bound_ok = static_cast<double>(*r.internal_edges) <= *r.internal_bound_rhs + kSpectralTolerance;
  }
  return r;
}

RamanujanResult is_ramanujan_graph(const GraphView& g, const SearchCaps& caps) {
  auto deg = g.regular_degree();
  if (!deg) throw Error(ErrorCode::NotRegular, "Ramanujan test needs a regular graph");
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "Ramanujan test needs a connected graph");
  RamanujanResult r;
  r.degree = *deg;
  r.bound = 2.0 * std::sqrt(static_cast<double>(*deg) - 1.0);
  const double k = static_cast<double>(*deg);
  r.ramanujan = true;
  for (double ev : adjacency_spectrum(g, caps)) {
    if (std::abs(std::abs(ev) - k) <= kSpectralTolerance) continue;
    r.max_nontrivial = std::max(r.max_nontrivial, std::abs(ev));
    if (std::abs(ev) > r.bound + kSpectralTolerance) {
      if (!r.offending || std::abs(ev) > std::abs(*r.offending)) r.offending = ev;
      r.ramanujan = false;
    }
  }
  return r;
}

}  // namespace hdx
