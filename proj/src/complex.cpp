#include "hdx/complex.hpp"

#include "hdx/bitvec.hpp"
#include "hdx/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hdx {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
  const std::size_t size = facets.front().size();
  if (size == 0) throw Error(ErrorCode::InvalidFacet, "facets must have at least one vertex");
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> ids;
  std::vector<Face> index_facets;
  index_facets.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.size() != size)
      throw Error(ErrorCode::MixedFacetSizes,
                  "facet sizes " + std::to_string(size) + " and " + std::to_string(f.size()));
    Face face;
    for (const auto& label : f) {
      if (label.empty()) throw Error(ErrorCode::InvalidFacet, "empty vertex label");
      auto [it, inserted] = ids.emplace(label, static_cast<int>(labels.size()));
      if (inserted) labels.push_back(label);
      face.push_back(it->second);
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw Error(ErrorCode::InvalidFacet, "repeated vertex in a facet");
    index_facets.push_back(std::move(face));
  }
  return from_index_facets(labels, index_facets);
}

SimplicialComplex SimplicialComplex::from_index_facets(const std::vector<std::string>& labels,
                                                       const std::vector<Face>& input) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
  const std::size_t size = input.front().size();
  std::vector<Face> facets;
  facets.reserve(input.size());
  std::vector<char> used(labels.size(), 0);
  for (const auto& f : input) {
    if (f.size() != size)
      throw Error(ErrorCode::MixedFacetSizes,
                  "facet sizes " + std::to_string(size) + " and " + std::to_string(f.size()));
    Face face = f;
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw Error(ErrorCode::InvalidFacet, "repeated vertex in a facet");
    for (int v : face) {
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        throw Error(ErrorCode::InvalidFacet, "vertex index out of range");
      used[static_cast<std::size_t>(v)] = 1;
    }
    facets.push_back(std::move(face));
  }
  if (size > 24) throw Error(ErrorCode::TooLarge, "facet dimension above 23 is not supported");

  SimplicialComplex x;
  std::vector<int> remap(labels.size(), -1);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<int>(x.labels_.size());
    x.labels_.push_back(labels[v]);
  }
  for (auto& f : facets)
    for (int& v : f) v = remap[static_cast<std::size_t>(v)];
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  x.dim_ = static_cast<int>(size) - 1;
  const std::size_t levels = size + 1;
  std::vector<std::map<Face, std::int64_t>> counts(levels);
  for (const auto& f : facets) {
    const std::uint32_t masks = 1u << size;
    for (std::uint32_t m = 0; m < masks; ++m) {
      Face sub;
      for (std::size_t b = 0; b < size; ++b)
        if (m >> b & 1u) sub.push_back(f[b]);
      counts[sub.size()][sub] += 1;
    }
  }
  x.faces_.resize(levels);
  x.index_.resize(levels);
  x.facet_degree_.resize(levels);
  for (std::size_t l = 0; l < levels; ++l) {
    for (const auto& [face, c] : counts[l]) {
      x.index_[l].emplace(face, x.faces_[l].size());
      x.faces_[l].push_back(face);
      x.facet_degree_[l].push_back(c);
    }
  }
  x.subfaces_.resize(levels);
  x.cofaces_.resize(levels);
  for (std::size_t l = 0; l < levels; ++l) x.cofaces_[l].resize(x.faces_[l].size());
  for (std::size_t l = 1; l < levels; ++l) {
    x.subfaces_[l].resize(x.faces_[l].size());
    for (std::size_t j = 0; j < x.faces_[l].size(); ++j) {
      const Face& f = x.faces_[l][j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub;
        sub.reserve(f.size() - 1);
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != drop) sub.push_back(f[t]);
        const std::size_t s = x.index_[l - 1].at(sub);
        x.subfaces_[l][j].push_back(s);
        x.cofaces_[l - 1][s].push_back(j);
      }
      std::sort(x.subfaces_[l][j].begin(), x.subfaces_[l][j].end());
    }
  }
  for (auto& level : x.cofaces_)
    for (auto& c : level) std::sort(c.begin(), c.end());
  return x;
}

std::span<const Face> SimplicialComplex::faces(int i) const noexcept {
  if (!has_dim(i)) return {};
  return faces_[static_cast<std::size_t>(i + 1)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& face) const {
  const int i = static_cast<int>(face.size()) - 1;
  if (!has_dim(i)) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(i + 1)];
  auto it = idx.find(face);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SimplicialComplex::vertex_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::span<const std::size_t> SimplicialComplex::subfaces(int i, std::size_t idx) const {
  if (i < 0 || i > dim_) throw Error(ErrorCode::DimensionOutOfRange, "subfaces of dimension " + std::to_string(i));
  return subfaces_[static_cast<std::size_t>(i + 1)][idx];
}

std::span<const std::size_t> SimplicialComplex::cofaces(int i, std::size_t idx) const {
  if (!has_dim(i)) throw Error(ErrorCode::DimensionOutOfRange, "cofaces of dimension " + std::to_string(i));
  return cofaces_[static_cast<std::size_t>(i + 1)][idx];
}

std::int64_t SimplicialComplex::weight_denominator(int i) const {
  return binomial(dim_ + 1, i + 1) * static_cast<std::int64_t>(count(dim_));
}

Rational SimplicialComplex::weight(int i, std::size_t idx) const {
  return make_rational(facet_degree(i, idx), weight_denominator(i));
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& face) const {
  std::vector<std::string> out;
  out.reserve(face.size());
  for (int v : face) out.push_back(labels_[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::canonical_facets() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets()) {
    auto labels = face_labels(f);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  if (k < 0 || k > dim_) throw Error(ErrorCode::DimensionOutOfRange, "skeleton " + std::to_string(k));
  const auto f = faces(k);
  return from_index_facets(labels_, std::vector<Face>(f.begin(), f.end()));
}

Link link(const SimplicialComplex& x, const Face& tau_in) {
  Face tau = tau_in;
  std::sort(tau.begin(), tau.end());
  if (!x.index_of(tau)) throw Error(ErrorCode::FaceNotPresent, "face is not in the complex");
  std::vector<Face> link_facets;
  for (const auto& f : x.facets()) {
    if (!std::includes(f.begin(), f.end(), tau.begin(), tau.end())) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), tau.begin(), tau.end(), std::back_inserter(rest));
    link_facets.push_back(std::move(rest));
  }
  Link out{SimplicialComplex::from_index_facets(x.labels(), link_facets), {}, {}};
  for (const auto& label : out.complex.labels()) out.parent_vertex.push_back(*x.vertex_index(label));
  const int ld = out.complex.dim();
  out.to_parent.resize(static_cast<std::size_t>(ld + 2));
  for (int k = -1; k <= ld; ++k) {
    for (const auto& rho : out.complex.faces(k)) {
      Face up = tau;
      for (int v : rho) up.push_back(out.parent_vertex[static_cast<std::size_t>(v)]);
      std::sort(up.begin(), up.end());
      out.to_parent[static_cast<std::size_t>(k + 1)].push_back(*x.index_of(up));
    }
  }
  return out;
}

std::vector<FaceWeight> weight_profile(const SimplicialComplex& x, int i) {
  if (!x.has_dim(i))
    throw Error(ErrorCode::DimensionOutOfRange, "dimension " + std::to_string(i) + " outside -1.." +
                                                    std::to_string(x.dim()));
  std::vector<FaceWeight> out;
  out.reserve(x.count(i));
  for (std::size_t j = 0; j < x.count(i); ++j) out.push_back({x.facet_degree(i, j), x.weight(i, j)});
  return out;
}

namespace {

std::vector<BitVec> adjacency_rows(const SimplicialComplex& x) {
  std::vector<BitVec> adj(x.num_vertices(), BitVec(x.num_vertices()));
  for (const auto& e : x.faces(1)) {
    adj[static_cast<std::size_t>(e[0])].set(static_cast<std::size_t>(e[1]));
    adj[static_cast<std::size_t>(e[1])].set(static_cast<std::size_t>(e[0]));
  }
  return adj;
}

struct IsoSearch {
  const SimplicialComplex& a;
  const SimplicialComplex& b;
  std::vector<BitVec> adj_a, adj_b;
  std::vector<std::vector<std::int64_t>> inv_a, inv_b;
  std::vector<int> order;
  std::vector<int> map;
  std::vector<char> taken;

  bool facets_match() const {
    for (const auto& f : a.facets()) {
      Face g;
      for (int v : f) g.push_back(map[static_cast<std::size_t>(v)]);
      std::sort(g.begin(), g.end());
      if (!b.index_of(g)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return facets_match();
    const int u = order[depth];
    const auto uu = static_cast<std::size_t>(u);
    for (std::size_t cand = 0; cand < b.num_vertices(); ++cand) {
      if (taken[cand] || inv_a[uu] != inv_b[cand]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < depth && ok; ++prev) {
        const auto p = static_cast<std::size_t>(order[prev]);
        ok = adj_a[uu].get(p) == adj_b[cand].get(static_cast<std::size_t>(map[p]));
      }
      if (!ok) continue;
      map[uu] = static_cast<int>(cand);
      taken[cand] = 1;
      if (extend(depth + 1)) return true;
      taken[cand] = 0;
      map[uu] = -1;
    }
    return false;
  }
};

std::vector<std::vector<std::int64_t>> vertex_invariants(const SimplicialComplex& x,
                                                         const std::vector<BitVec>& adj) {
  std::vector<std::vector<std::int64_t>> inv(x.num_vertices());
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    inv[v].push_back(x.facet_degree(0, v));
    inv[v].push_back(static_cast<std::int64_t>(adj[v].count()));
    std::vector<std::int64_t> nbr;
    adj[v].for_each_set([&](std::size_t w) { nbr.push_back(static_cast<std::int64_t>(adj[w].count())); });
    std::sort(nbr.begin(), nbr.end());
    inv[v].insert(inv[v].end(), nbr.begin(), nbr.end());
  }
  return inv;
}

}  // namespace

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = -1; i <= a.dim(); ++i) {
    if (a.count(i) != b.count(i)) return false;
    std::vector<std::int64_t> da(a.facet_degrees(i).begin(), a.facet_degrees(i).end());
    std::vector<std::int64_t> db(b.facet_degrees(i).begin(), b.facet_degrees(i).end());
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
  }
  if (a.dim() < 0) return true;
  IsoSearch s{a, b, adjacency_rows(a), adjacency_rows(b), {}, {}, {}, {}, {}};
  s.inv_a = vertex_invariants(a, s.adj_a);
  s.inv_b = vertex_invariants(b, s.adj_b);
  {
    auto sa = s.inv_a, sb = s.inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // connectivity-first ordering keeps adjacency pruning effective
  const std::size_t n = a.num_vertices();
  std::vector<char> placed(n, 0);
  std::vector<int> links_to_placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || links_to_placed[v] > links_to_placed[best] ||
          (links_to_placed[v] == links_to_placed[best] && s.adj_a[v].count() > s.adj_a[best].count()))
        best = v;
    }
    placed[best] = 1;
    s.order.push_back(static_cast<int>(best));
    s.adj_a[best].for_each_set([&](std::size_t w) { ++links_to_placed[w]; });
  }
  s.map.assign(n, -1);
  s.taken.assign(n, 0);
  return s.extend(0);
}

}  // namespace hdx
