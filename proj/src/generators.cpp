#include "hdx/generators.hpp"

#include "hdx/errors.hpp"
#include "hdx/spectral.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hdx {

SimplicialComplex complete_complex(int n, int d) {
  if (d < 1 || d >= n) throw Error(ErrorCode::BadParams, "complete complex needs 1 <= d < n");
  if (binomial(n, d + 1) > 5'000'000) throw Error(ErrorCode::TooLarge, "too many facets");
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  std::vector<Face> facets;
  Face f(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) f[static_cast<std::size_t>(j)] = j;
  for (;;) {
    facets.push_back(f);
    int j = d;
    while (j >= 0 && f[static_cast<std::size_t>(j)] == n - d - 1 + j) --j;
    if (j < 0) break;
    ++f[static_cast<std::size_t>(j)];
    for (int t = j + 1; t <= d; ++t) f[static_cast<std::size_t>(t)] = f[static_cast<std::size_t>(t - 1)] + 1;
  }
  return SimplicialComplex::from_index_facets(labels, facets);
}

FiniteField::FiniteField(int q) : q_(q) {
  const auto n = static_cast<std::size_t>(q);
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  neg_.assign(n, 0);
  inv_.assign(n, 0);
  if (q == 4) {
    static constexpr std::array<int, 16> gf4_mul = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        add_[static_cast<std::size_t>(a * 4 + b)] = a ^ b;
        mul_[static_cast<std::size_t>(a * 4 + b)] = gf4_mul[static_cast<std::size_t>(a * 4 + b)];
      }
  } else if (q == 2 || q == 3 || q == 5 || q == 7) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[static_cast<std::size_t>(a * q + b)] = (a + b) % q;
        mul_[static_cast<std::size_t>(a * q + b)] = (a * b) % q;
      }
  } else {
    throw Error(ErrorCode::UnsupportedField, "q = " + std::to_string(q) + " (supported: 2, 3, 4, 5, 7)");
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
}

namespace {

int rank_over(const FiniteField& f, std::vector<std::vector<int>> rows) {
  const std::size_t m = rows.empty() ? 0 : rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < m && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(rank)]);
    auto& piv = rows[static_cast<std::size_t>(rank)];
    const int s = f.inv(piv[c]);
    for (auto& e : piv) e = f.mul(e, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const int factor = rows[r][c];
      for (std::size_t j = 0; j < m; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, piv[j]));
    }
    ++rank;
  }
  return rank;
}

bool contained_in(const FiniteField& f, const SubspaceRows& u, const SubspaceRows& w) {
  SubspaceRows all = w;
  all.insert(all.end(), u.begin(), u.end());
  return rank_over(f, all) == static_cast<int>(w.size());
}

std::vector<SubspaceRows> rref_subspaces(int q, int m, int k) {
  std::vector<SubspaceRows> out;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      // free positions: (row, col) with col > pivot of row and col not a pivot
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<int> digits(free.size(), 0);
      for (;;) {
        SubspaceRows rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(m), 0));
        for (int r = 0; r < k; ++r)
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
        for (std::size_t t = 0; t < free.size(); ++t)
          rows[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)] = digits[t];
        out.push_back(std::move(rows));
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      return;
    }
    for (int c = start; c < m; ++c) {
      pivots[static_cast<std::size_t>(idx)] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t gaussian_binomial(int m, int k, int q) {
  if (k < 0 || k > m) return 0;
  std::int64_t num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    std::int64_t a = 1, b = 1;
    for (int t = 0; t < m - j; ++t) a *= q;
    for (int t = 0; t < j + 1; ++t) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

SubspaceTable subspace_table(int q, int m) {
  FiniteField field(q);
  if (m < 2 || m > 4) throw Error(ErrorCode::BadParams, "ambient dimension must be 2..4");
  SubspaceTable t{q, m, {}};
  for (int k = 1; k < m; ++k) t.by_dim.push_back(rref_subspaces(q, m, k));
  return t;
}

std::string subspace_label(const SubspaceRows& rows) {
  std::string s = std::to_string(rows.size()) + ":";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += '|';
    for (int e : rows[r]) s += static_cast<char>('0' + e);
  }
  return s;
}

SimplicialComplex flag_complex(int q, int m) {
  FiniteField field(q);
  if (m < 3 || m > 4) throw Error(ErrorCode::BadParams, "flag complex needs 3 <= m <= 4");
  const SubspaceTable t = subspace_table(q, m);
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (const auto& level : t.by_dim) {
    offset.push_back(labels.size());
    for (const auto& s : level) labels.push_back(subspace_label(s));
  }
  // up[k][i]: (k+2)-dim subspaces containing subspace i of dimension k+1
  std::vector<std::vector<std::vector<std::size_t>>> up(t.by_dim.size() - 1);
  for (std::size_t k = 0; k + 1 < t.by_dim.size(); ++k) {
    up[k].resize(t.by_dim[k].size());
    for (std::size_t i = 0; i < t.by_dim[k].size(); ++i)
      for (std::size_t j = 0; j < t.by_dim[k + 1].size(); ++j)
        if (contained_in(field, t.by_dim[k][i], t.by_dim[k + 1][j])) up[k][i].push_back(j);
  }
  std::vector<Face> facets;
  Face chain;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t k, std::size_t i) {
    chain.push_back(static_cast<int>(offset[k] + i));
    if (k + 1 == t.by_dim.size())
      facets.push_back(chain);
    else
      for (std::size_t j : up[k][i]) extend(k + 1, j);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < t.by_dim[0].size(); ++i) extend(0, i);
  return SimplicialComplex::from_index_facets(labels, facets);
}

bool CayleyComplex::pure() const {
  return std::all_of(uncovered.begin(), uncovered.end(), [](std::size_t c) { return c == 0; });
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& g, const Perm& h) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[static_cast<std::size_t>(h[x])];
  return out;
}

Perm inverse(const Perm& g) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[static_cast<std::size_t>(g[x])] = static_cast<int>(x);
  return out;
}

std::string perm_label(const Perm& g) {
  std::string s;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (x) s += '.';
    s += std::to_string(g[x]);
  }
  return s;
}

}  // namespace

CayleyComplex cayley_clique_complex(int degree, const std::vector<std::vector<int>>& generators, int max_dim,
                                    const SearchCaps& caps) {
  if (degree < 1) throw Error(ErrorCode::BadParams, "permutation degree must be positive");
  if (max_dim < 0) throw Error(ErrorCode::BadParams, "max_dim must be non-negative");
  Perm identity(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) identity[static_cast<std::size_t>(x)] = x;
  std::set<Perm> gens;
  for (const auto& g : generators) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity) throw Error(ErrorCode::BadParams, "generator " + perm_label(g) + " is not a permutation");
    if (g == identity) throw Error(ErrorCode::BadParams, "the identity may not be a generator");
    gens.insert(g);
  }
  for (const auto& g : gens)
    if (!gens.count(inverse(g)))
      throw Error(ErrorCode::NonSymmetricGenerators, "inverse of " + perm_label(g) + " is missing");

  std::set<Perm> group{identity};
  std::deque<Perm> queue{identity};
  while (!queue.empty()) {
    const Perm g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm h = compose(g, s);
      if (group.insert(h).second) {
        if (group.size() > caps.group_max)
          throw Error(ErrorCode::GroupTooLarge, "group exceeds " + std::to_string(caps.group_max) + " elements");
        queue.push_back(std::move(h));
      }
    }
  }
  const std::vector<Perm> elems(group.begin(), group.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> nbrs(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) nbrs[i].push_back(index.at(compose(elems[i], s)));
    std::sort(nbrs[i].begin(), nbrs[i].end());
  }

  // cliques[k]: cliques with k+1 vertices, as ascending index lists
  std::vector<std::vector<Face>> cliques(static_cast<std::size_t>(max_dim + 1));
  Face current;
  std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& candidates) {
    cliques[current.size() - 1].push_back(current);
    if (static_cast<int>(current.size()) == max_dim + 1) return;
    for (int v : candidates) {
      std::vector<int> next;
      const auto& nv = nbrs[static_cast<std::size_t>(v)];
      for (int u : candidates)
        if (u > v && std::binary_search(nv.begin(), nv.end(), u)) next.push_back(u);
      current.push_back(v);
      grow(next);
      current.pop_back();
    }
  };
  for (std::size_t v = 0; v < elems.size(); ++v) {
    std::vector<int> cand;
    for (int u : nbrs[v])
      if (u > static_cast<int>(v)) cand.push_back(u);
    current = {static_cast<int>(v)};
    grow(cand);
  }

  CayleyComplex out{SimplicialComplex::from_index_facets({"_"}, {{}}), elems.size(), 0, {}, std::nullopt};
  int top = max_dim;
  while (top > 0 && cliques[static_cast<std::size_t>(top)].empty()) --top;
  out.dimension = top;
  std::vector<std::string> labels;
  for (const auto& g : elems) labels.push_back(perm_label(g));
  out.complex = SimplicialComplex::from_index_facets(labels, cliques[static_cast<std::size_t>(top)]);
  out.uncovered.assign(static_cast<std::size_t>(top), 0);
  for (int k = 0; k < top; ++k)
    for (const auto& c : cliques[static_cast<std::size_t>(k)]) {
      Face mapped;
      bool present = true;
      for (int v : c) {
        auto idx = out.complex.vertex_index(labels[static_cast<std::size_t>(v)]);
        if (!idx) {
          present = false;
          break;
        }
        mapped.push_back(*idx);
      }
      if (present) {
        std::sort(mapped.begin(), mapped.end());
        present = out.complex.index_of(mapped).has_value();
      }
      if (!present) ++out.uncovered[static_cast<std::size_t>(k)];
    }
  if (elems.size() >= 2 && elems.size() <= caps.spectrum_max_n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (int j : nbrs[i])
        if (static_cast<std::size_t>(j) > i) edges.emplace_back(i, static_cast<std::size_t>(j));
    const auto spec = adjacency_spectrum(GraphView::from_edges(elems.size(), edges), caps);
    out.second_eigenvalue = spec[1];
  }
  return out;
}

namespace {

// a + bφ with φ² = φ + 1
struct GoldenInt {
  long a = 0, b = 0;
  friend GoldenInt operator+(GoldenInt x, GoldenInt y) { return {x.a + y.a, x.b + y.b}; }
  friend GoldenInt operator-(GoldenInt x, GoldenInt y) { return {x.a - y.a, x.b - y.b}; }
  friend GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(GoldenInt, GoldenInt) = default;
};

// Icosahedron at (0, ±1, ±φ) and cyclic shifts, edge length 2, modulo x ~ -x.
SimplicialComplex projective_plane_6() {
  using Point = std::array<GoldenInt, 3>;
  std::vector<Point> pts;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const Point base{GoldenInt{0, 0}, GoldenInt{s1, 0}, GoldenInt{0, s2}};
      for (int shift = 0; shift < 3; ++shift)
        pts.push_back({base[static_cast<std::size_t>((3 - shift) % 3)], base[static_cast<std::size_t>((4 - shift) % 3)],
                       base[static_cast<std::size_t>((5 - shift) % 3)]});
    }
  auto sqdist = [](const Point& p, const Point& q) {
    GoldenInt s;
    for (std::size_t c = 0; c < 3; ++c) s = s + (p[c] - q[c]) * (p[c] - q[c]);
    return s;
  };
  auto neg = [](const Point& p) {
    Point r;
    for (std::size_t c = 0; c < 3; ++c) r[c] = GoldenInt{} - p[c];
    return r;
  };
  const std::size_t n = pts.size();
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (std::size_t j = 0; j < n; ++j)
      if (neg(pts[i]) == pts[j]) cls[j] = classes;
    ++classes;
  }
  const GoldenInt four{4, 0};
  std::set<Face> triangles;
  std::size_t faces = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!(sqdist(pts[i], pts[j]) == four && sqdist(pts[j], pts[k]) == four && sqdist(pts[i], pts[k]) == four))
          continue;
        ++faces;
        Face t{cls[i], cls[j], cls[k]};
        std::sort(t.begin(), t.end());
        triangles.insert(t);
      }
  if (n != 12 || classes != 6 || faces != 20 || triangles.size() != 10)
    throw std::logic_error("icosahedron quotient has the wrong shape");
  std::vector<std::string> labels;
  for (int c = 0; c < classes; ++c) labels.push_back(std::to_string(c));
  return SimplicialComplex::from_index_facets(labels, {triangles.begin(), triangles.end()});
}

SimplicialComplex from_string_facets(const std::vector<std::vector<std::string>>& facets) {
  return SimplicialComplex::from_facets(facets);
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  out = std::stoi(s);
  return true;
}

}  // namespace

SimplicialComplex fixture(const std::string& name) {
  if (name == "rp2_6") return projective_plane_6();
  if (name == "petersen") {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    auto label = [](std::pair<int, int> p) { return std::to_string(p.first) + std::to_string(p.second); };
    std::vector<std::vector<std::string>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        const auto [a, b] = pairs[i];
        const auto [c, d] = pairs[j];
        if (a != c && a != d && b != c && b != d) edges.push_back({label(pairs[i]), label(pairs[j])});
      }
    return from_string_facets(edges);
  }
  if (name == "fano_incidence") {
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < 7; ++i)
      for (int p : {1, 2, 4}) edges.push_back({"p" + std::to_string((p + i) % 7), "l" + std::to_string(i)});
    return from_string_facets(edges);
  }
  if (name == "octahedron_boundary") {
    std::vector<std::vector<std::string>> tris;
    for (const char* x : {"+x", "-x"})
      for (const char* y : {"+y", "-y"})
        for (const char* z : {"+z", "-z"}) tris.push_back({x, y, z});
    return from_string_facets(tris);
  }
  if (name == "torus_7") {
    std::vector<std::vector<std::string>> tris;
    for (int i = 0; i < 7; ++i) {
      tris.push_back({std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)});
      tris.push_back({std::to_string(i), std::to_string((i + 2) % 7), std::to_string((i + 3) % 7)});
    }
    return from_string_facets(tris);
  }
  if (name == "two_triangles") return from_string_facets({{"a", "b", "c"}, {"b", "c", "d"}});
  if (name == "two_edges") return from_string_facets({{"a", "b"}, {"c", "d"}});
  if (name.rfind("cycle_", 0) == 0) {
    int k = 0;
    if (parse_int(name.substr(6), k) && k >= 3) {
      std::vector<std::vector<std::string>> edges;
      for (int i = 0; i < k; ++i) edges.push_back({std::to_string(i), std::to_string((i + 1) % k)});
      return from_string_facets(edges);
    }
  }
  if (name.rfind("complete_", 0) == 0) {
    const auto rest = name.substr(9);
    const auto us = rest.find('_');
    int n = 0, d = 0;
    if (us != std::string::npos && parse_int(rest.substr(0, us), n) && parse_int(rest.substr(us + 1), d) && d >= 1 &&
        d < n)
      return complete_complex(n, d);
  }
  throw Error(ErrorCode::UnknownFixture, name);
}

std::vector<std::string> fixture_names() {
  return {"rp2_6",        "cycle_5",       "petersen",   "fano_incidence", "octahedron_boundary",
          "torus_7",      "complete_4_2",  "two_triangles", "two_edges"};
}

}  // namespace hdx
