#include "support.hpp"

#include "hdx/generators.hpp"
#include "hdx/harness.hpp"

#include <doctest.h>

using namespace hdx;
using namespace hdx::test;

TEST_CASE("closure of two triangles sharing an edge") {
  const auto x = build({{"a", "b", "c"}, {"b", "c", "d"}});
  CHECK(x.dim() == 2);
  CHECK(x.count(-1) == 1);
  CHECK(x.count(0) == 4);
  CHECK(x.count(1) == 5);
  CHECK(x.count(2) == 2);
}

TEST_CASE("single edge") {
  const auto x = build({{"a", "b"}});
  CHECK(x.dim() == 1);
  CHECK(x.faces(-1)[0].empty());
  CHECK(x.labels() == std::vector<std::string>{"a", "b"});
  CHECK(x.count(1) == 1);
}

TEST_CASE("construction errors") {
  CHECK(error_of([] { build({{"a", "b", "c"}, {"a", "b"}}); }) == ErrorCode::MixedFacetSizes);
  CHECK(error_of([] { SimplicialComplex::from_facets({}); }) == ErrorCode::EmptyInput);
  CHECK(error_of([] { build({{"a", "a"}}); }) == ErrorCode::InvalidFacet);
  CHECK(error_of([] { build({{"a", ""}}); }) == ErrorCode::InvalidFacet);
}

TEST_CASE("vertex order follows first appearance") {
  const auto x = build({{"z", "y"}, {"y", "x"}});
  CHECK(x.labels() == std::vector<std::string>{"z", "y", "x"});
}

TEST_CASE("links") {
  const auto x = build({{"a", "b", "c"}, {"b", "c", "d"}});
  const auto lb = link(x, face_of(x, {"b"}));
  CHECK(lb.complex.dim() == 1);
  std::vector<std::string> labels = lb.complex.labels();
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"a", "c", "d"});
  const auto edges = lb.complex.canonical_facets();
  CHECK(edges == std::vector<std::vector<std::string>>{{"a", "c"}, {"c", "d"}});
  // correspondence back to X contains τ
  for (std::size_t j = 0; j < lb.complex.count(1); ++j) {
    const auto& parent = x.faces(2)[lb.to_parent[2][j]];
    CHECK(std::find(parent.begin(), parent.end(), *x.vertex_index("b")) != parent.end());
  }

  const auto d4 = build({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  const auto la = link(d4, face_of(d4, {"a"}));
  CHECK(la.complex.count(0) == 3);
  CHECK(la.complex.count(1) == 3);

  const auto top = link(d4, face_of(d4, {"a", "b", "c"}));
  CHECK(top.complex.dim() == -1);
  CHECK(top.complex.count(-1) == 1);

  CHECK(error_of([&] { link(x, face_of(x, {"a", "d"})); }) == ErrorCode::FaceNotPresent);
}

TEST_CASE("link dimension drops by |τ|") {
  const auto x = complete_complex(6, 3);
  for (int k = -1; k <= 3; ++k)
    for (std::size_t j = 0; j < x.count(k); ++j) CHECK(link(x, x.faces(k)[j]).complex.dim() == 3 - k - 1);
}

TEST_CASE("weights") {
  const auto tri = build({{"a", "b", "c"}});
  for (const auto& w : weight_profile(tri, 1)) {
    CHECK(w.facet_degree == 1);
    CHECK(w.weight == q("1/3"));
  }
  const auto d4 = complete_complex(4, 2);
  for (const auto& w : weight_profile(d4, 0)) CHECK(w.weight == q("1/4"));
  for (const auto& w : weight_profile(d4, 1)) CHECK(w.weight == q("1/6"));
  const auto k4 = complete_complex(4, 1);
  for (const auto& w : weight_profile(k4, 0)) {
    CHECK(w.facet_degree == 3);
    CHECK(w.weight == q("1/4"));
  }
  CHECK(error_of([&] { weight_profile(d4, 3); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("weights sum to one in every dimension") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_pure_complex(rng, 10, 3);
    for (int i = -1; i <= x.dim(); ++i) {
      Rational s(0);
      for (const auto& w : weight_profile(x, i)) s += w.weight;
      CHECK(s == 1);
    }
  }
}

TEST_CASE("rebuilding from facets is idempotent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto x = random_pure_complex(rng, 9, 3);
    std::vector<std::vector<std::string>> facets = x.canonical_facets();
    std::reverse(facets.begin(), facets.end());
    const auto y = SimplicialComplex::from_facets(facets);
    CHECK(y.canonical_facets() == x.canonical_facets());
    CHECK(are_isomorphic(x, y));
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(fixture("cycle_5"), build({{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "t"}, {"t", "p"}})));
  CHECK_FALSE(are_isomorphic(fixture("cycle_6"), build({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"},
                                                        {"f", "d"}})));
  CHECK_FALSE(are_isomorphic(fixture("petersen"), fixture("cycle_5")));
}

TEST_CASE("skeleton") {
  const auto s = complete_complex(5, 3).skeleton(1);
  CHECK(s.dim() == 1);
  CHECK(s.count(1) == 10);
  for (const auto& w : weight_profile(s, 0)) CHECK(w.facet_degree == 4);
}
