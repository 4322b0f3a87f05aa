#include "hdx/f2_linear.hpp"

#include "hdx/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace hdx {

SearchCaps SearchCaps::parse(const std::string& spec) { return parse(spec, SearchCaps{}); }

SearchCaps SearchCaps::parse(const std::string& spec, const SearchCaps& base) {
  SearchCaps caps = base;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "caps entry without '=': " + item);
    const std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "caps value is not an integer: " + item);
    }
    if (value < 0) throw Error(ErrorCode::ConfigError, "negative cap: " + item);
    if (key == "exhaustive_log2")
      caps.exhaustive_log2 = static_cast<int>(std::min<long long>(value, 62));
    else if (key == "mitm_log2")
      caps.mitm_log2 = static_cast<int>(std::min<long long>(value, 62));
    else if (key == "class_log2")
      caps.class_log2 = static_cast<int>(std::min<long long>(value, 62));
    else if (key == "spectrum_max_n")
      caps.spectrum_max_n = static_cast<std::size_t>(value);
    else if (key == "cheeger_max_n")
      caps.cheeger_max_n = static_cast<int>(std::min<long long>(value, 40));
    else if (key == "group_max")
      caps.group_max = static_cast<std::size_t>(value);
    else if (key == "workers")
      caps.workers = static_cast<unsigned>(std::clamp<long long>(value, 1, 256));
    else
      throw Error(ErrorCode::ConfigError, "unknown cap '" + key + "'");
  }
  return caps;
}

SearchCaps SearchCaps::from_env() {
  if (const char* env = std::getenv("HDX_CAPS")) return parse(env);
  return {};
}

BitVec F2Matrix::column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].get(c)) v.set(r);
  return v;
}

BitVec F2Matrix::apply(const BitVec& x) const {
  BitVec y(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].dot(x)) y.set(r);
  return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols() != rhs.rows()) throw Error(ErrorCode::BadParams, "matrix shapes do not compose");
  F2Matrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    rows_[r].for_each_set([&](std::size_t k) { out.rows_[r] ^= rhs.rows_[k]; });
  return out;
}

bool F2Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.none(); });
}

Reduction reduce(const F2Matrix& a) {
  Reduction out;
  out.kernel.ambient = a.cols();
  out.image.ambient = a.rows();
  struct Entry {
    BitVec vec;
    BitVec combo;
  };
  std::unordered_map<std::size_t, Entry> table;  // keyed by lowest set bit
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BitVec col = a.column(j);
    BitVec combo = BitVec::unit(a.cols(), j);
    const BitVec original = col;
    while (col.any()) {
      auto it = table.find(col.first_set());
      if (it == table.end()) break;
      col ^= it->second.vec;
      combo ^= it->second.combo;
    }
    if (col.none()) {
      out.kernel.vectors.push_back(std::move(combo));
    } else {
      const std::size_t p = col.first_set();
      table.emplace(p, Entry{std::move(col), std::move(combo)});
      out.image.vectors.push_back(original);
      out.pivot_columns.push_back(j);
    }
  }
  out.rank = out.image.vectors.size();
  return out;
}

EchelonSpace::EchelonSpace(const SubspaceBasis& basis) : ambient_(basis.ambient) {
  for (const auto& v : basis.vectors) insert(v);
}

bool EchelonSpace::insert(BitVec v) {
  v = reduce(std::move(v));
  if (v.none()) return false;
  const std::size_t p = v.first_set();
  for (auto& row : rows_)
    if (row.get(p)) row ^= v;
  // keep rows ordered by pivot
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

BitVec EchelonSpace::reduce(BitVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) v ^= rows_[r];
  return v;
}

std::vector<std::size_t> EchelonSpace::free_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

namespace {

std::int64_t weight_of(const BitVec& v, std::span<const std::int64_t> w) {
  std::int64_t s = 0;
  v.for_each_set([&](std::size_t i) { s += w[i]; });
  return s;
}

BitVec coefficients_from_gray(std::uint64_t g, std::size_t k) {
  BitVec c(k);
  for (std::size_t j = 0; j < k; ++j)
    if (g >> j & 1u) c.set(j);
  return c;
}

struct GrayBest {
  std::int64_t weight = std::numeric_limits<std::int64_t>::max();
  BitVec v;
  std::uint64_t coeffs = 0;
};

bool better(std::int64_t w, const BitVec& v, const GrayBest& best) {
  return w < best.weight || (w == best.weight && BitVec::lex_less(v, best.v));
}

// Gray-code walk over the low `low_bits` coefficients with the remaining
// high coefficients fixed to `prefix`.
GrayBest gray_walk(const BitVec& target, std::span<const BitVec> basis,
                   const std::vector<std::vector<std::size_t>>& supports, std::span<const std::int64_t> w,
                   std::size_t low_bits, std::uint64_t prefix) {
  BitVec v = target;
  std::uint64_t g = prefix << low_bits;
  for (std::size_t j = low_bits; j < basis.size(); ++j)
    if (g >> j & 1u) v ^= basis[j];
  std::int64_t cur = weight_of(v, w);
  GrayBest best{cur, v, g};
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t s = 1; s < steps; ++s) {
    const auto j = static_cast<std::size_t>(std::countr_zero(s));
    for (std::size_t p : supports[j]) cur += v.get(p) ? -w[p] : w[p];
    v ^= basis[j];
    g ^= std::uint64_t{1} << j;
    if (cur < best.weight || (cur == best.weight && BitVec::lex_less(v, best.v))) {
      best.weight = cur;
      best.v = v;
      best.coeffs = g;
    }
  }
  return best;
}

CosetMinimum exhaustive(const BitVec& target, std::span<const BitVec> basis, std::span<const std::int64_t> w,
                        unsigned workers) {
  const std::size_t k = basis.size();
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(k);
  for (const auto& b : basis) supports.push_back(b.indices());

  std::size_t split = 0;
  while ((1u << split) < workers && split < k && split < 8) ++split;
  const std::size_t low = k - split;
  const std::size_t parts = std::size_t{1} << split;
  std::vector<GrayBest> results(parts);
  if (parts == 1) {
    results[0] = gray_walk(target, basis, supports, w, low, 0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t p = 0; p < parts; ++p)
      pool.emplace_back([&, p] { results[p] = gray_walk(target, basis, supports, w, low, p); });
    for (auto& t : pool) t.join();
  }
  GrayBest best = results[0];
  for (std::size_t p = 1; p < parts; ++p)
    if (better(results[p].weight, results[p].v, best)) best = results[p];
  return {best.weight, best.v, coefficients_from_gray(best.coeffs, k)};
}

struct HalfEntry {
  std::uint64_t coeffs;
  std::int64_t cost;
  std::uint64_t key;
  BitVec u;
};

CosetMinimum meet_in_the_middle(const BitVec& target, std::span<const BitVec> basis,
                                std::span<const std::int64_t> w) {
  const std::size_t m = target.size();
  const std::size_t k = basis.size();

  // Reduced row echelon form, tracking each row as a combination of the input basis.
  std::vector<BitVec> rows(basis.begin(), basis.end());
  std::vector<BitVec> combos;
  for (std::size_t j = 0; j < k; ++j) combos.push_back(BitVec::unit(k, j));
  std::vector<std::size_t> pivot;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < k; ++col) {
    std::size_t r = rank;
    while (r < k && !rows[r].get(col)) ++r;
    if (r == k) continue;
    std::swap(rows[r], rows[rank]);
    std::swap(combos[r], combos[rank]);
    for (std::size_t o = 0; o < k; ++o) {
      if (o != rank && rows[o].get(col)) {
        rows[o] ^= rows[rank];
        combos[o] ^= combos[rank];
      }
    }
    pivot.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  combos.resize(rank);

  // Coset representative with zeros on every pivot; an element of the coset is
  // then t + Σ c_r rows[r] and its pivot coordinates are exactly c.
  BitVec t = target;
  BitVec t_combo(k);
  for (std::size_t r = 0; r < rank; ++r) {
    if (t.get(pivot[r])) {
      t ^= rows[r];
      t_combo ^= combos[r];
    }
  }

  std::vector<char> is_pivot(m, 0);
  for (auto p : pivot) is_pivot[p] = 1;
  std::vector<std::size_t> free_coords;
  for (std::size_t c = 0; c < m; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);
  const std::size_t nf = free_coords.size();
  std::vector<std::int64_t> wf(nf);
  for (std::size_t j = 0; j < nf; ++j) wf[j] = w[free_coords[j]];
  auto restrict_free = [&](const BitVec& v) {
    BitVec out(nf);
    for (std::size_t j = 0; j < nf; ++j)
      if (v.get(free_coords[j])) out.set(j);
    return out;
  };
  std::vector<BitVec> rows_free;
  for (const auto& r : rows) rows_free.push_back(restrict_free(r));
  const BitVec t_free = restrict_free(t);

  const std::size_t ka = rank / 2;
  const std::size_t kb = rank - ka;

  // Hash key: the heaviest free coordinates, so the key mismatch weight is a
  // strong lower bound on the pair's free-coordinate weight.
  std::vector<std::size_t> key_pos(nf);
  std::iota(key_pos.begin(), key_pos.end(), 0);
  std::stable_sort(key_pos.begin(), key_pos.end(), [&](std::size_t a, std::size_t b) { return wf[a] > wf[b]; });
  const std::size_t key_bits = std::min<std::size_t>({nf, std::max<std::size_t>(kb, 1), 20});
  key_pos.resize(key_bits);
  auto key_of = [&](const BitVec& u) {
    std::uint64_t key = 0;
    for (std::size_t b = 0; b < key_bits; ++b)
      if (u.get(key_pos[b])) key |= std::uint64_t{1} << b;
    return key;
  };

  auto build_half = [&](std::size_t first, std::size_t count, const BitVec& start) {
    std::vector<HalfEntry> out;
    out.reserve(std::size_t{1} << count);
    BitVec u = start;
    std::int64_t cost = 0;
    std::uint64_t g = 0;
    out.push_back({g, cost, key_of(u), u});
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << count); ++s) {
      const auto j = static_cast<std::size_t>(std::countr_zero(s));
      u ^= rows_free[first + j];
      g ^= std::uint64_t{1} << j;
      cost += (g >> j & 1u) ? w[pivot[first + j]] : -w[pivot[first + j]];
      out.push_back({g, cost, key_of(u), u});
    }
    return out;
  };
  std::vector<HalfEntry> left = build_half(0, ka, t_free);
  std::vector<HalfEntry> right = build_half(ka, kb, BitVec(nf));
  std::stable_sort(left.begin(), left.end(), [](const HalfEntry& a, const HalfEntry& b) { return a.cost < b.cost; });
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t idx = 0; idx < right.size(); ++idx) buckets[right[idx].key].push_back(idx);
  for (auto& [key, list] : buckets)
    std::stable_sort(list.begin(), list.end(),
                     [&](std::size_t a, std::size_t b) { return right[a].cost < right[b].cost; });
  std::int64_t min_right = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : right) min_right = std::min(min_right, e.cost);

  std::vector<std::pair<std::int64_t, std::uint64_t>> diffs;
  diffs.reserve(std::size_t{1} << key_bits);
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << key_bits); ++e) {
    std::int64_t we = 0;
    for (std::size_t b = 0; b < key_bits; ++b)
      if (e >> b & 1u) we += wf[key_pos[b]];
    diffs.emplace_back(we, e);
  }
  std::sort(diffs.begin(), diffs.end());

  auto assemble = [&](const HalfEntry& a, const HalfEntry& b) {
    BitVec v(m);
    for (std::size_t r = 0; r < ka; ++r)
      if (a.coeffs >> r & 1u) v.set(pivot[r]);
    for (std::size_t r = 0; r < kb; ++r)
      if (b.coeffs >> r & 1u) v.set(pivot[ka + r]);
    const BitVec uf = a.u ^ b.u;
    uf.for_each_set([&](std::size_t j) { v.set(free_coords[j]); });
    return v;
  };

  std::int64_t best_w = std::numeric_limits<std::int64_t>::max();
  BitVec best_v;
  const HalfEntry* best_a = nullptr;
  const HalfEntry* best_b = nullptr;
  const std::int64_t min_left = left.front().cost;
  for (const auto& [we, e] : diffs) {
    if (best_a && we + min_left + min_right > best_w) break;
    for (const auto& a : left) {
      if (best_a && a.cost + we + min_right > best_w) break;
      auto it = buckets.find(a.key ^ e);
      if (it == buckets.end()) continue;
      for (std::size_t bi : it->second) {
        const HalfEntry& b = right[bi];
        if (best_a && a.cost + b.cost + we > best_w) break;
        std::int64_t total = a.cost + b.cost;
        const BitVec uf = a.u ^ b.u;
        uf.for_each_set([&](std::size_t j) { total += wf[j]; });
        if (best_a && total > best_w) continue;
        BitVec v = assemble(a, b);
        if (!best_a || total < best_w || BitVec::lex_less(v, best_v)) {
          best_w = total;
          best_v = std::move(v);
          best_a = &a;
          best_b = &b;
        }
      }
    }
  }

  BitVec coeffs = t_combo;
  for (std::size_t r = 0; r < ka; ++r)
    if (best_a->coeffs >> r & 1u) coeffs ^= combos[r];
  for (std::size_t r = 0; r < kb; ++r)
    if (best_b->coeffs >> r & 1u) coeffs ^= combos[ka + r];
  return {best_w, best_v, coeffs};
}

}  // namespace

CosetMinimum min_weight_in_coset(const BitVec& target, std::span<const BitVec> basis,
                                 std::span<const std::int64_t> weights, const SearchCaps& caps,
                                 CosetStrategy strategy) {
  if (weights.size() != target.size()) throw Error(ErrorCode::BadParams, "weight vector length mismatch");
  for (const auto& b : basis)
    if (b.size() != target.size()) throw Error(ErrorCode::BadParams, "basis vector length mismatch");
  const auto k = static_cast<int>(basis.size());
  if (strategy == CosetStrategy::Auto) strategy = k <= caps.exhaustive_log2 ? CosetStrategy::Exhaustive
                                                                              : CosetStrategy::MeetInTheMiddle;
  if (strategy == CosetStrategy::Exhaustive) {
    if (k > caps.exhaustive_log2 || k > 62)
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "coset of 2^" + std::to_string(k) + " elements exceeds the exhaustive cap");
    return exhaustive(target, basis, weights, caps.workers);
  }
  if (k > caps.mitm_log2 || k > 62)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "coset of 2^" + std::to_string(k) + " elements exceeds the meet-in-the-middle cap");
  return meet_in_the_middle(target, basis, weights);
}

RationalCosetMinimum min_weight_in_coset(const BitVec& target, const SubspaceBasis& basis,
                                         std::span<const Rational> weights, const SearchCaps& caps,
                                         CosetStrategy strategy) {
  if (weights.size() != target.size()) throw Error(ErrorCode::BadParams, "weight vector length mismatch");
  mpz_class common = 1;
  for (const auto& wt : weights) {
    if (sgn(wt) <= 0) throw Error(ErrorCode::BadParams, "weights must be positive");
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), wt.get_den().get_mpz_t());
  }
  std::vector<std::int64_t> scaled;
  scaled.reserve(weights.size());
  mpz_class total = 0;
  for (const auto& wt : weights) {
    mpz_class s = wt.get_num() * (common / wt.get_den());
    total += s;
    if (!s.fits_slong_p()) throw Error(ErrorCode::TooLarge, "weights do not fit 64-bit common scale");
    scaled.push_back(s.get_si());
  }
  if (!total.fits_slong_p()) throw Error(ErrorCode::TooLarge, "weight sum does not fit 64-bit common scale");
  auto r = min_weight_in_coset(target, basis.vectors, scaled, caps, strategy);
  Rational value(mpz_class(std::to_string(r.weight)), common);
  value.canonicalize();
  return {value, std::move(r.argmin), std::move(r.coefficients)};
}

}  // namespace hdx
