#include "support.hpp"

#include "hdx/caps.hpp"
#include "hdx/f2_linear.hpp"
#include "hdx/generators.hpp"
#include "hdx/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hdx;
using namespace hdx::test;

namespace {

BitVec bits(const char* s) {
  BitVec v(std::char_traits<char>::length(s));
  for (std::size_t i = 0; s[i]; ++i)
    if (s[i] == '1') v.set(i);
  return v;
}

F2Matrix matrix(std::initializer_list<const char*> rows) {
  F2Matrix m(rows.size(), std::char_traits<char>::length(*rows.begin()));
  std::size_t r = 0;
  for (const char* row : rows) {
    for (std::size_t c = 0; row[c]; ++c)
      if (row[c] == '1') m.set(r, c);
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("reduce") {
  auto id = reduce(matrix({"100", "010", "001"}));
  CHECK(id.rank == 3);
  CHECK(id.kernel.dim() == 0);

  auto ones = reduce(matrix({"11", "11"}));
  CHECK(ones.rank == 1);
  REQUIRE(ones.kernel.dim() == 1);
  CHECK(ones.kernel.vectors[0] == bits("11"));
  CHECK(ones.image.vectors[0] == bits("11"));
  CHECK(ones.pivot_columns == std::vector<std::size_t>{0});

  // connected K3: Ker δ0 is the constants
  const auto k3 = reduce(coboundary_matrix(fixture("cycle_3"), 0));
  CHECK(k3.rank == 2);
  REQUIRE(k3.kernel.dim() == 1);
  CHECK(k3.kernel.vectors[0] == bits("111"));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() & 1u) m.set(i, j);
    const auto red = reduce(m);
    CHECK(red.rank + red.kernel.dim() == c);
    CHECK(red.image.dim() == red.rank);
    for (const auto& k : red.kernel.vectors) CHECK(m.apply(k).none());
    for (std::size_t j = 0; j < red.rank; ++j) CHECK(m.column(red.pivot_columns[j]) == red.image.vectors[j]);
  }
}

TEST_CASE("echelon space") {
  EchelonSpace e(4);
  CHECK(e.insert(bits("1100")));
  CHECK(e.insert(bits("0110")));
  CHECK_FALSE(e.insert(bits("1010")));
  CHECK(e.contains(bits("1010")));
  CHECK_FALSE(e.contains(bits("0001")));
  CHECK(e.dim() == 2);
  CHECK(e.free_coordinates() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("coset minimum examples") {
  const std::vector<Rational> third(3, q("1/3"));
  SubspaceBasis all{3, {bits("111")}};

  auto a = min_weight_in_coset(bits("111"), all, third);
  CHECK(a.weight == 0);
  CHECK(a.argmin == bits("000"));

  auto b = min_weight_in_coset(bits("110"), all, third);
  CHECK(b.weight == q("1/3"));
  CHECK(b.argmin == bits("001"));

  // K4 vertices, B^0 = {0, 1}
  const std::vector<Rational> quarter(4, q("1/4"));
  auto c = min_weight_in_coset(bits("1110"), SubspaceBasis{4, {bits("1111")}}, quarter);
  CHECK(c.weight == q("1/4"));
  CHECK(c.argmin == bits("0001"));
}

TEST_CASE("coset minimum ties go to the lexicographically smallest vector") {
  // {1000, 0100} both weigh 1: 0100 holds 0 at the first differing index
  const std::vector<std::int64_t> w{1, 1, 1, 1};
  const std::vector<BitVec> basis{bits("1100")};
  for (auto s : {CosetStrategy::Exhaustive, CosetStrategy::MeetInTheMiddle}) {
    const auto m = min_weight_in_coset(bits("1000"), basis, w, {}, s);
    CHECK(m.weight == 1);
    CHECK(m.argmin == bits("0100"));
    CHECK(m.coefficients == bits("1"));
  }
}

TEST_CASE("coset strategies agree with plain enumeration") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t len = 8 + rng() % 50;
    const std::size_t k = rng() % std::min<std::size_t>(len, 18);
    EchelonSpace e(len);
    std::vector<BitVec> basis;
    while (basis.size() < k) {
      BitVec v(len);
      for (std::size_t j = 0; j < len; ++j)
        if (rng() % 4 == 0) v.set(j);
      if (v.any() && e.insert(v)) basis.push_back(v);
    }
    BitVec target(len);
    for (std::size_t j = 0; j < len; ++j)
      if (rng() & 1u) target.set(j);
    std::vector<std::int64_t> w(len);
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 5);

    const auto o = oracle::min_weight_in_coset(target, basis, w);
    for (auto s : {CosetStrategy::Auto, CosetStrategy::Exhaustive, CosetStrategy::MeetInTheMiddle}) {
      const auto m = min_weight_in_coset(target, basis, w, {}, s);
      CHECK(m.weight == o.weight);
      CHECK(m.argmin == o.argmin);
      BitVec back = target;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (m.coefficients.get(j)) back ^= basis[j];
      CHECK(back == m.argmin);
    }
  }
}

TEST_CASE("caps") {
  SearchCaps tiny;
  tiny.exhaustive_log2 = 3;
  tiny.mitm_log2 = 4;
  std::vector<BitVec> basis;
  for (std::size_t j = 0; j < 12; ++j) basis.push_back(BitVec::unit(12, j));
  const std::vector<std::int64_t> w(12, 1);
  CHECK(error_of([&] { min_weight_in_coset(BitVec(12), basis, w, tiny); }) == ErrorCode::SearchSpaceTooLarge);
  CHECK(error_of([&] { min_weight_in_coset(BitVec(12), basis, w, tiny, CosetStrategy::Exhaustive); }) ==
        ErrorCode::SearchSpaceTooLarge);

  const auto parsed = SearchCaps::parse("exhaustive_log2=10,workers=3");
  CHECK(parsed.exhaustive_log2 == 10);
  CHECK(parsed.workers == 3u);
  CHECK(parsed.mitm_log2 == SearchCaps{}.mitm_log2);
  CHECK(error_of([] { SearchCaps::parse("nope=1"); }) == ErrorCode::ConfigError);
  CHECK(error_of([] { SearchCaps::parse("mitm_log2=x"); }) == ErrorCode::ConfigError);
}

TEST_CASE("parallel enumeration matches serial") {
  SearchCaps par;
  par.workers = 4;
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const std::size_t len = 40;
    std::vector<BitVec> basis;
    EchelonSpace e(len);
    while (basis.size() < 16) {
      BitVec v(len);
      for (std::size_t j = 0; j < len; ++j)
        if (rng() % 3 == 0) v.set(j);
      if (e.insert(v)) basis.push_back(v);
    }
    BitVec target(len);
    for (std::size_t j = 0; j < len; ++j)
      if (rng() & 1u) target.set(j);
    std::vector<std::int64_t> w(len);
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 3);
    const auto a = min_weight_in_coset(target, basis, w, {}, CosetStrategy::Exhaustive);
    const auto b = min_weight_in_coset(target, basis, w, par, CosetStrategy::Exhaustive);
    CHECK(a.weight == b.weight);
    CHECK(a.argmin == b.argmin);
  }
}
