#include "support.hpp"

#include "hdx/generators.hpp"
#include "hdx/local_structure.hpp"
#include "hdx/spectral.hpp"

#include <doctest.h>

using namespace hdx;
using namespace hdx::test;

TEST_CASE("complete complexes") {
  const auto a = complete_complex(4, 2);
  CHECK(a.count(0) == 4);
  CHECK(a.count(1) == 6);
  CHECK(a.count(2) == 4);
  CHECK(complete_complex(5, 1).count(1) == 10);
  CHECK(complete_complex(6, 2).count(2) == 20);
  CHECK(error_of([] { complete_complex(3, 3); }) == ErrorCode::BadParams);
  CHECK(error_of([] { complete_complex(4, -1); }) == ErrorCode::BadParams);
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 1, 3) == 40);
  CHECK(gaussian_binomial(3, 1, 4) == 21);
  for (auto [q_, m] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}, std::pair{3, 4}, std::pair{4, 3}}) {
    const auto t = subspace_table(q_, m);
    for (int k = 1; k < m; ++k)
      CHECK(static_cast<std::int64_t>(t.by_dim[static_cast<std::size_t>(k - 1)].size()) == gaussian_binomial(m, k, q_));
  }
}

TEST_CASE("flag complexes") {
  const auto f23 = flag_complex(2, 3);
  const auto g23 = GraphView::from_complex(f23);
  CHECK(f23.dim() == 1);
  CHECK(f23.count(0) == 14);
  CHECK(f23.count(1) == 21);
  CHECK(g23.regular_degree() == 3u);

  const auto f33 = flag_complex(3, 3);
  CHECK(f33.count(0) == 26);
  CHECK(f33.count(1) == 52);
  CHECK(GraphView::from_complex(f33).regular_degree() == 4u);

  const auto f24 = flag_complex(2, 4);
  CHECK(f24.dim() == 2);
  CHECK(f24.count(0) == 65);
  const auto g24 = GraphView::from_complex(f24);
  int planes = 0, others = 0;
  for (std::size_t v = 0; v < g24.size(); ++v) {
    if (f24.labels()[v].rfind("2:", 0) == 0) {
      CHECK(g24.degree(v) == 6);
      ++planes;
    } else {
      CHECK(g24.degree(v) == 14);
      ++others;
    }
  }
  CHECK(planes == 35);
  CHECK(others == 30);
  // every edge of the building lies in q+1 = 3 chambers
  for (std::size_t e = 0; e < f24.count(1); ++e) CHECK(f24.facet_degree(1, e) == 3);
  // links of points and hyperplanes are copies of flag(2,3)
  CHECK(are_isomorphic(link(f24, Face{*f24.vertex_index(f24.labels()[0])}).complex, f23) ==
        (f24.labels()[0].rfind("2:", 0) != 0));
  CHECK(is_link_regular(f24, 2) == false);  // plane links are K_{3,3}

  const auto f43 = flag_complex(4, 3);
  CHECK(f43.count(0) == 42);
  CHECK(GraphView::from_complex(f43).regular_degree() == 5u);

  CHECK(error_of([] { flag_complex(6, 3); }) == ErrorCode::UnsupportedField);
  CHECK(error_of([] { flag_complex(2, 5); }) == ErrorCode::BadParams);
}

TEST_CASE("cayley clique complexes") {
  const auto s3 = cayley_clique_complex(3, {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}, 2);
  CHECK(s3.group_order == 6);
  CHECK(s3.dimension == 1);
  CHECK(s3.complex.count(1) == 9);

  std::vector<std::vector<int>> z5;
  for (int k : {1, 2, 3, 4}) {
    std::vector<int> p(5);
    for (int x = 0; x < 5; ++x) p[static_cast<std::size_t>(x)] = (x + k) % 5;
    z5.push_back(p);
  }
  const auto k5 = cayley_clique_complex(5, z5, 2);
  CHECK(k5.group_order == 5);
  CHECK(k5.complex.count(1) == 10);
  CHECK(k5.complex.count(2) == 10);
  CHECK(k5.pure());

  const auto z2 = cayley_clique_complex(2, {{1, 0}}, 2);
  CHECK(z2.group_order == 2);
  CHECK(z2.complex.dim() == 1);
  CHECK(z2.complex.count(1) == 1);

  CHECK(error_of([] { cayley_clique_complex(3, {{1, 2, 0}}, 2); }) == ErrorCode::NonSymmetricGenerators);
  CHECK(error_of([] { cayley_clique_complex(3, {{0, 0, 1}}, 2); }) == ErrorCode::BadParams);
  CHECK(error_of([] { cayley_clique_complex(3, {{0, 1, 2}}, 2); }) == ErrorCode::BadParams);
  SearchCaps tiny;
  tiny.group_max = 10;
  CHECK(error_of([&] { cayley_clique_complex(4, {{1, 0, 2, 3}, {1, 2, 3, 0}, {3, 0, 1, 2}}, 2, tiny); }) ==
        ErrorCode::GroupTooLarge);
}

TEST_CASE("fixtures") {
  const auto rp2 = fixture("rp2_6");
  CHECK(rp2.count(0) == 6);
  CHECK(rp2.count(1) == 15);
  CHECK(rp2.count(2) == 10);
  // every edge in exactly two triangles, every vertex link a 5-cycle
  for (std::size_t e = 0; e < 15; ++e) CHECK(rp2.facet_degree(1, e) == 2);
  for (std::size_t v = 0; v < 6; ++v)
    CHECK(are_isomorphic(link(rp2, Face{static_cast<int>(v)}).complex, fixture("cycle_5")));

  const auto c5 = fixture("cycle_5");
  CHECK(c5.count(0) == 5);
  CHECK(c5.count(1) == 5);
  CHECK(are_isomorphic(fixture("fano_incidence"), flag_complex(2, 3)));

  const auto torus = fixture("torus_7");
  CHECK(torus.count(1) == 21);
  CHECK(torus.count(2) == 14);

  const auto oct = fixture("octahedron_boundary");
  CHECK(oct.count(0) == 6);
  CHECK(oct.count(2) == 8);

  CHECK(fixture("petersen").count(1) == 15);
  CHECK(fixture("complete_5_3").count(3) == 5);
  CHECK(error_of([] { fixture("klein_bottle"); }) == ErrorCode::UnknownFixture);
  CHECK(error_of([] { fixture("cycle_2"); }) == ErrorCode::UnknownFixture);
  for (const auto& name : fixture_names()) CHECK_NOTHROW(fixture(name));
}
