#include "hdx/oracles.hpp"

#include "hdx/errors.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace hdx::oracle {

BitVec coboundary(const SimplicialComplex& x, int i, const BitVec& alpha) {
  const auto upper = x.faces(i + 1);
  BitVec out(upper.size());
  for (std::size_t t = 0; t < upper.size(); ++t) {
    bool parity = false;
    for (std::size_t drop = 0; drop < upper[t].size(); ++drop) {
      Face sigma;
      for (std::size_t j = 0; j < upper[t].size(); ++j)
        if (j != drop) sigma.push_back(upper[t][j]);
      auto idx = x.index_of(sigma);
      if (idx && alpha.get(*idx)) parity = !parity;
    }
    out.set(t, parity);
  }
  return out;
}

CosetMin min_weight_in_coset(const BitVec& target, std::span<const BitVec> basis, std::span<const std::int64_t> weights) {
  if (basis.size() > 26) throw Error(ErrorCode::TooLarge, "oracle coset search is limited to 26 generators");
  CosetMin best{-1, target};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    BitVec v = target;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (mask >> j & 1u) v ^= basis[j];
    std::int64_t w = 0;
    v.for_each_set([&](std::size_t k) { w += weights[k]; });
    if (best.weight < 0 || w < best.weight || (w == best.weight && BitVec::lex_less(v, best.argmin))) {
      best.weight = w;
      best.argmin = v;
    }
  }
  return best;
}

namespace {

std::int64_t facets_containing(const SimplicialComplex& x, const Face& sigma) {
  std::int64_t c = 0;
  for (const auto& f : x.facets())
    if (std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) ++c;
  return c;
}

std::uint64_t to_mask(const BitVec& v) {
  std::uint64_t m = 0;
  v.for_each_set([&](std::size_t k) { m |= std::uint64_t{1} << k; });
  return m;
}

// Greedy XOR basis size.
int rank_of(std::vector<std::uint64_t> vs) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(vs.begin(), vs.end(), [&](std::uint64_t v) { return v >> bit & 1u; });
    if (it == vs.end()) continue;
    const std::uint64_t p = *it;
    vs.erase(it);
    for (auto& v : vs)
      if (v >> bit & 1u) v ^= p;
    ++rank;
  }
  return rank;
}

// Labels every element of {0..2^n-1} by its coset of span(gens).
std::vector<std::int32_t> coset_labels(int n, const std::vector<std::uint64_t>& gens, std::int32_t& count) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int32_t> label(size, -1);
  std::vector<std::uint32_t> stack;
  count = 0;
  for (std::size_t s = 0; s < size; ++s) {
    if (label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (auto g : gens) {
        const auto u = static_cast<std::uint32_t>(v ^ g);
        if (label[u] < 0) {
          label[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

Expansion expansion(const SimplicialComplex& x, int i) {
  if (i < 0 || i > x.dim()) throw Error(ErrorCode::DimensionOutOfRange, "oracle dimension");
  const auto faces = x.faces(i);
  const auto upper = x.faces(i + 1);
  const int n = static_cast<int>(faces.size());
  if (n > 22 || upper.size() > 64) throw Error(ErrorCode::TooLarge, "oracle enumeration too large");
  const std::size_t size = std::size_t{1} << n;

  std::vector<std::int64_t> w(faces.size()), wu(upper.size());
  for (std::size_t k = 0; k < faces.size(); ++k) w[k] = facets_containing(x, faces[k]);
  for (std::size_t k = 0; k < upper.size(); ++k) wu[k] = facets_containing(x, upper[k]);
  const std::int64_t nfac = static_cast<std::int64_t>(x.facets().size());
  const std::int64_t den_i = binomial(x.dim() + 1, i + 1) * nfac;
  const std::int64_t den_u = binomial(x.dim() + 1, i + 2) * nfac;

  std::vector<std::uint64_t> cols(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) cols[k] = to_mask(coboundary(x, i, BitVec::unit(faces.size(), k)));
  std::vector<std::uint64_t> delta(size, 0);
  std::vector<std::int64_t> nrm(size, 0);
  for (std::size_t m = 1; m < size; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    delta[m] = delta[m & (m - 1)] ^ cols[low];
    nrm[m] = nrm[m & (m - 1)] + w[low];
  }
  auto upper_norm = [&](std::uint64_t b) {
    std::int64_t s = 0;
    for (; b; b &= b - 1) s += wu[static_cast<std::size_t>(std::countr_zero(b))];
    return s;
  };

  std::vector<std::uint64_t> bgens;
  const auto lower = x.faces(i - 1);
  for (std::size_t k = 0; k < lower.size(); ++k)
    bgens.push_back(to_mask(coboundary(x, i - 1, BitVec::unit(lower.size(), k))));
  std::vector<std::uint64_t> zs;
  for (std::size_t m = 0; m < size; ++m)
    if (delta[m] == 0) zs.push_back(m);

  Expansion out;
  out.dim_b = rank_of(bgens);
  out.dim_z = std::countr_zero(zs.size());
  std::vector<std::uint64_t> zgens;
  {
    // span(zs) = zs, so any greedy independent subset generates it
    std::vector<std::uint64_t> basis;
    for (auto z : zs) {
      std::uint64_t r = z;
      for (auto b : basis) r = std::min(r, r ^ b);
      if (r) {
        basis.push_back(r);
        std::sort(basis.rbegin(), basis.rend());
        zgens.push_back(z);
      }
    }
  }

  std::int32_t nb = 0, nz = 0;
  const auto lab_b = coset_labels(n, bgens, nb);
  const auto lab_z = coset_labels(n, zgens, nz);
  std::vector<std::int64_t> min_b(static_cast<std::size_t>(nb), -1), min_z(static_cast<std::size_t>(nz), -1);
  for (std::size_t m = 0; m < size; ++m) {
    auto& b = min_b[static_cast<std::size_t>(lab_b[m])];
    if (b < 0 || nrm[m] < b) b = nrm[m];
    auto& z = min_z[static_cast<std::size_t>(lab_z[m])];
    if (z < 0 || nrm[m] < z) z = nrm[m];
  }

  // Ratios (upper numerator)/(class numerator), compared by cross-multiplication.
  auto scan_min = [&](const std::vector<std::int32_t>& lab, const std::vector<std::int64_t>& mins)
      -> std::optional<Rational> {
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    const std::int32_t zero_class = lab[0];
    std::vector<char> seen(mins.size(), 0);
    for (std::size_t m = 0; m < size; ++m) {
      const auto c = static_cast<std::size_t>(lab[m]);
      if (lab[m] == zero_class || seen[c]) continue;
      seen[c] = 1;
      const std::int64_t num = upper_norm(delta[m]);
      if (!best || num * best->second < best->first * mins[c]) best = std::pair{num, mins[c]};
    }
    if (!best) return std::nullopt;
    if (best->first == 0) return Rational(0);
    return Rational(static_cast<long>(best->first)) * den_i / (Rational(static_cast<long>(best->second)) * den_u);
  };
  out.epsilon = scan_min(lab_b, min_b);
  out.epsilon_tilde = scan_min(lab_z, min_z);

  std::unordered_map<std::uint64_t, std::int64_t> pre;
  for (std::size_t m = 0; m < size; ++m) {
    if (delta[m] == 0) continue;
    auto [it, inserted] = pre.emplace(delta[m], nrm[m]);
    if (!inserted) it->second = std::min(it->second, nrm[m]);
  }
  std::optional<std::pair<std::int64_t, std::int64_t>> worst;
  for (const auto& [beta, fill] : pre) {
    const std::int64_t bn = upper_norm(beta);
    if (!worst || fill * worst->second > worst->first * bn) worst = std::pair{fill, bn};
  }
  if (worst) out.mu = Rational(static_cast<long>(worst->first)) * den_u / (Rational(static_cast<long>(worst->second)) * den_i);

  std::optional<std::int64_t> sys;
  for (auto z : zs)
    if (lab_b[z] != lab_b[0] && (!sys || nrm[z] < *sys)) sys = nrm[z];
  if (sys) out.systole = Rational(static_cast<long>(*sys)) / den_i;
  return out;
}

Cheeger cheeger(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n < 2 || n > 24) throw Error(ErrorCode::TooLarge, "oracle Cheeger scan needs 2..24 vertices");
  std::optional<Rational> best;
  std::vector<std::size_t> witness;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m < full; ++m) {
    std::int64_t cut = 0;
    for (auto [u, v] : edges)
      if ((m >> u & 1u) != (m >> v & 1u)) ++cut;
    const auto k = static_cast<std::int64_t>(std::popcount(m));
    const std::int64_t side = std::min<std::int64_t>(k, static_cast<std::int64_t>(n) - k);
    const Rational h = make_rational(cut, side);
    std::vector<std::size_t> small;
    const std::uint64_t smaller = (k <= static_cast<std::int64_t>(n) - k) ? m : (full & ~m);
    for (std::size_t v = 0; v < n; ++v)
      if (smaller >> v & 1u) small.push_back(v);
    if (!best || h < *best || (h == *best && small < witness)) {
      best = h;
      witness = small;
    }
  }
  return {*best, witness};
}

bool locally_minimal(const SimplicialComplex& x, int i, const BitVec& alpha) {
  if (i == 0) return true;
  const auto top = x.faces(i);
  const auto mid = x.faces(i - 1);
  for (int v = 0; v < static_cast<int>(x.num_vertices()); ++v) {
    // link faces of dim i-1 (from X(i)) and of dim i-2 (from X(i-1))
    std::vector<Face> upper, lower;
    std::vector<std::int64_t> weight;
    std::vector<char> in_alpha;
    for (std::size_t k = 0; k < top.size(); ++k) {
      const auto& s = top[k];
      if (!std::binary_search(s.begin(), s.end(), v)) continue;
      Face r;
      for (int u : s)
        if (u != v) r.push_back(u);
      upper.push_back(r);
      weight.push_back(facets_containing(x, s));
      in_alpha.push_back(alpha.get(k) ? 1 : 0);
    }
    for (const auto& s : mid) {
      if (!std::binary_search(s.begin(), s.end(), v)) continue;
      Face r;
      for (int u : s)
        if (u != v) r.push_back(u);
      lower.push_back(r);
    }
    if (lower.size() > 22) throw Error(ErrorCode::TooLarge, "oracle link enumeration too large");
    std::int64_t base = 0;
    for (std::size_t k = 0; k < upper.size(); ++k)
      if (in_alpha[k]) base += weight[k];
    if (base == 0) continue;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << lower.size()); ++g) {
      std::int64_t total = 0;
      for (std::size_t k = 0; k < upper.size(); ++k) {
        bool bit = in_alpha[k] != 0;
        for (std::size_t j = 0; j < lower.size(); ++j)
          if ((g >> j & 1u) && std::includes(upper[k].begin(), upper[k].end(), lower[j].begin(), lower[j].end()))
            bit = !bit;
        if (bit) total += weight[k];
      }
      if (total < base) return false;
    }
  }
  return true;
}

std::int64_t interval_stabbing(const std::vector<std::pair<Rational, Rational>>& intervals) {
  std::vector<std::pair<Rational, int>> events;
  for (const auto& [a, b] : intervals) {
    events.emplace_back(std::min(a, b), 0);  // opens sort before closes
    events.emplace_back(std::max(a, b), 1);
  }
  std::sort(events.begin(), events.end());
  std::int64_t cur = 0, best = 0;
  for (const auto& e : events) {
    cur += e.second == 0 ? 1 : -1;
    best = std::max(best, cur);
  }
  return best;
}

namespace {

template <class T>
struct P2 {
  T x, y;
  friend bool operator==(const P2&, const P2&) = default;
};

template <class T>
T cross(const P2<T>& a, const P2<T>& b, const P2<T>& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

template <class T>
int sign_of(const T& v) {
  return v > T(0) ? 1 : (v < T(0) ? -1 : 0);
}

template <class T>
bool triangle_contains(const P2<T>& a, const P2<T>& b, const P2<T>& c, const P2<T>& p) {
  const int d = sign_of(cross(a, b, c));
  if (d != 0) {
    const int la = sign_of(cross(p, b, c)), lb = sign_of(cross(a, p, c)), lc = sign_of(cross(a, b, p));
    return la * d >= 0 && lb * d >= 0 && lc * d >= 0;
  }
  // collinear: the hull is the segment between the two farthest points
  const P2<T>* pts[3] = {&a, &b, &c};
  auto d2 = [](const P2<T>& u, const P2<T>& v) -> T { return (u.x - v.x) * (u.x - v.x) + (u.y - v.y) * (u.y - v.y); };
  const P2<T>*e1 = &a, *e2 = &a;
  T far = T(0);
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t)
      if (d2(*pts[s], *pts[t]) > far) {
        far = d2(*pts[s], *pts[t]);
        e1 = pts[s];
        e2 = pts[t];
      }
  if (sign_of(far) == 0) return p == a;
  if (sign_of(cross(*e1, *e2, p)) != 0) return false;
  const T dot = (p.x - e1->x) * (e2->x - e1->x) + (p.y - e1->y) * (e2->y - e1->y);
  return sign_of(dot) >= 0 && dot <= far;
}

}  // namespace

std::int64_t planar_overlap(const SimplicialComplex& x, const PointConfig& p) {
  if (x.dim() != 2 || p.dim != 2) throw Error(ErrorCode::WrongDimension, "planar oracle needs a 2-complex in R^2");
  const auto images = vertex_images(x, p);
  const auto facets = x.facets();
  std::vector<P2<Rational>> q;
  for (const auto& c : images) q.push_back({c[0], c[1]});

  auto depth_rational = [&](const P2<Rational>& pt) {
    std::int64_t d = 0;
    for (const auto& f : facets)
      if (triangle_contains(q[static_cast<std::size_t>(f[0])], q[static_cast<std::size_t>(f[1])],
                            q[static_cast<std::size_t>(f[2])], pt))
        ++d;
    return d;
  };

  std::vector<P2<Rational>> special(q.begin(), q.end());
  const auto edges = x.faces(1);
  for (std::size_t s = 0; s < edges.size(); ++s)
    for (std::size_t t = s + 1; t < edges.size(); ++t) {
      const auto& a = q[static_cast<std::size_t>(edges[s][0])];
      const auto& b = q[static_cast<std::size_t>(edges[s][1])];
      const auto& c = q[static_cast<std::size_t>(edges[t][0])];
      const auto& d = q[static_cast<std::size_t>(edges[t][1])];
      // a + t(b-a) = c + u(d-c), by Cramer's rule
      const Rational m11 = b.x - a.x, m12 = c.x - d.x, m21 = b.y - a.y, m22 = c.y - d.y;
      const Rational det = m11 * m22 - m12 * m21;
      if (sgn(det) == 0) continue;
      const Rational r1 = c.x - a.x, r2 = c.y - a.y;
      const Rational tt = (r1 * m22 - m12 * r2) / det;
      const Rational uu = (m11 * r2 - r1 * m21) / det;
      if (sgn(tt) < 0 || tt > 1 || sgn(uu) < 0 || uu > 1) continue;
      special.push_back({a.x + tt * m11, a.y + tt * m21});
    }

  Rational xmin = q[0].x, xmax = q[0].x, ymin = q[0].y, ymax = q[0].y;
  for (const auto& v : q) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  std::int64_t best = 0;
  const Rational h = (xmax - xmin + ymax - ymin + 1) / 1000000;
  for (const auto& s : special) {
    best = std::max(best, depth_rational(s));
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        if (dx || dy) best = std::max(best, depth_rational({s.x + dx * h, s.y + dy * h}));
  }

  // Grid in integers: coordinates scaled by 399·L, L the common denominator.
  mpz_class l = 1;
  for (const auto& v : q) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.x.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.y.get_den_mpz_t());
  }
  auto scaled = [&](const Rational& r) -> __int128 {
    const mpz_class z = mpz_class(r * l * 399);
    if (!z.fits_slong_p()) throw Error(ErrorCode::TooLarge, "grid oracle coordinates overflow");
    return static_cast<__int128>(z.get_si());
  };
  std::vector<P2<__int128>> qi;
  for (const auto& v : q) qi.push_back({scaled(v.x), scaled(v.y)});
  const __int128 x0 = scaled(xmin), y0 = scaled(ymin);
  const __int128 wx = scaled(xmax) - x0, wy = scaled(ymax) - y0;
  for (int a = 0; a < 400; ++a)
    for (int b = 0; b < 400; ++b) {
      const P2<__int128> pt{x0 + a * wx / 399, y0 + b * wy / 399};
      std::int64_t d = 0;
      for (const auto& f : facets)
        if (triangle_contains(qi[static_cast<std::size_t>(f[0])], qi[static_cast<std::size_t>(f[1])],
                              qi[static_cast<std::size_t>(f[2])], pt))
          ++d;
      best = std::max(best, d);
    }
  return best;
}

}  // namespace hdx::oracle
