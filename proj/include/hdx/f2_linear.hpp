#pragma once

#include "hdx/bitvec.hpp"
#include "hdx/caps.hpp"
#include "hdx/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hdx {

/// Dense matrix over F2, stored as bit rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t nrows, std::size_t ncols) : rows_(nrows, BitVec(ncols)), ncols_(ncols) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return ncols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }

  BitVec column(std::size_t c) const;
  /// A·x over F2; x has cols() bits, result rows() bits.
  BitVec apply(const BitVec& x) const;
  F2Matrix operator*(const F2Matrix& rhs) const;
  bool is_zero() const;

 private:
  std::vector<BitVec> rows_;
  std::size_t ncols_ = 0;
};

struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<BitVec> vectors;

  std::size_t dim() const noexcept { return vectors.size(); }
};

struct Reduction {
  std::size_t rank = 0;
  /// Basis of Ker(A) in F2^cols.
  SubspaceBasis kernel;
  /// The linearly independent columns of A, lowest index first.
  SubspaceBasis image;
  /// Column index of each image basis vector (so e_{pivot_columns[j]} maps to image.vectors[j]).
  std::vector<std::size_t> pivot_columns;
};

/// Column reduction with lowest-index pivot choice.
Reduction reduce(const F2Matrix& a);

/// Subspace held in reduced row echelon form: canonical coset
/// representatives (zero on every pivot) and membership tests.
class EchelonSpace {
 public:
  explicit EchelonSpace(std::size_t ambient = 0) : ambient_(ambient) {}
  explicit EchelonSpace(const SubspaceBasis& basis);

  /// Adds v; returns false when v already lies in the span.
  bool insert(BitVec v);
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<BitVec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Ambient coordinates that are not pivots, ascending.
  std::vector<std::size_t> free_coordinates() const;

 private:
  std::size_t ambient_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

enum class CosetStrategy { Auto, Exhaustive, MeetInTheMiddle };

struct CosetMinimum {
  std::int64_t weight = 0;
  BitVec argmin;
  /// Coefficients of (argmin - target) on the supplied basis.
  BitVec coefficients;
};

/// Minimum of Σ_{j: v_j = 1} w_j over v ∈ target + span(basis), ties broken by
/// the lexicographically smallest v. Integer weights (>= 0) form the fast path
/// used internally; the common-denominator numerators of face weights.
///
/// Auto picks Gray-code enumeration up to 2^caps.exhaustive_log2 coset
/// elements and meet-in-the-middle up to 2^caps.mitm_log2; beyond that, or
/// beyond the cap of a forced strategy, throws SearchSpaceTooLarge.
CosetMinimum min_weight_in_coset(const BitVec& target, std::span<const BitVec> basis,
                                 std::span<const std::int64_t> weights, const SearchCaps& caps = {},
                                 CosetStrategy strategy = CosetStrategy::Auto);

struct RationalCosetMinimum {
  Rational weight;
  BitVec argmin;
  BitVec coefficients;
};

/// Exact-rational front end; every weight must be positive.
RationalCosetMinimum min_weight_in_coset(const BitVec& target, const SubspaceBasis& basis,
                                         std::span<const Rational> weights, const SearchCaps& caps = {},
                                         CosetStrategy strategy = CosetStrategy::Auto);

}  // namespace hdx
