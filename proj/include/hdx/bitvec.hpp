#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hdx {

/// Fixed-length bit vector over F2, packed into 64-bit words.
///
/// Ordering (`lex_less`) compares bit strings starting at index 0: the vector
/// holding a 0 at the first differing position is the smaller one.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : words_((nbits + 63) / 64, 0), size_(nbits) {}

  static BitVec unit(std::size_t nbits, std::size_t pos) {
    BitVec v(nbits);
    v.set(pos);
    return v;
  }
  static BitVec ones(std::size_t nbits);

  std::size_t size() const noexcept { return size_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }
  std::uint64_t* data() noexcept { return words_.data(); }

  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVec& operator&=(const BitVec& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  BitVec& operator|=(const BitVec& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) noexcept { return a &= b; }

  /// Complement within the first size() bits.
  BitVec complement() const;

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /// Parity of the intersection with `other`.
  bool dot(const BitVec& other) const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first_set() const noexcept;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;

  friend bool operator==(const BitVec& a, const BitVec& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  static bool lex_less(const BitVec& a, const BitVec& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

}  // namespace hdx
