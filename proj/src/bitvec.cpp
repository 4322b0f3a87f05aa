#include "hdx/bitvec.hpp"

#include "hdx/errors.hpp"

namespace hdx {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedFacetSizes: return "MixedFacetSizes";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidFacet: return "InvalidFacet";
    case ErrorCode::FaceNotPresent: return "FaceNotPresent";
    case ErrorCode::VertexNotPresent: return "VertexNotPresent";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DisconnectedLink: return "DisconnectedLink";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NonSymmetricGenerators: return "NonSymmetricGenerators";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

BitVec BitVec::ones(std::size_t nbits) {
  BitVec v(nbits);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  if (nbits % 64 != 0 && !v.words_.empty()) v.words_.back() = (std::uint64_t{1} << (nbits % 64)) - 1;
  return v;
}

BitVec BitVec::complement() const {
  BitVec v = ones(size_);
  v ^= *this;
  return v;
}

std::size_t BitVec::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool BitVec::lex_less(const BitVec& a, const BitVec& b) noexcept {
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      const int bit = std::countr_zero(diff);
      return ((a.words_[w] >> bit) & 1u) == 0;
    }
  }
  return false;
}

std::size_t BitVec::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hdx
