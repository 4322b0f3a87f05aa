#include "support.hpp"

#include "hdx/cochain.hpp"
#include "hdx/generators.hpp"
#include "hdx/harness.hpp"
#include "hdx/oracles.hpp"

#include <doctest.h>

#include <optional>

using namespace hdx;
using namespace hdx::test;

TEST_CASE("coboundary examples") {
  const auto k3 = build({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(coboundary(k3, cochain(k3, 0, {{"a"}})) == cochain(k3, 1, {{"a", "b"}, {"a", "c"}}));

  const auto d4 = build({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  CHECK(coboundary(d4, cochain(d4, 1, {{"a", "b"}})) == cochain(d4, 2, {{"a", "b", "c"}, {"a", "b", "d"}}));

  // δ_{-1} sends the nonempty (-1)-cochain to the constants
  Cochain empty_face{-1, BitVec::ones(1)};
  CHECK(coboundary(d4, empty_face).support == BitVec::ones(4));

  CHECK(error_of([&] { coboundary_matrix(d4, 2); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("delta squared vanishes and agrees with the face-by-face oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const auto x = random_pure_complex(rng, 10, 3);
    for (int i = -1; i <= x.dim() - 2; ++i) CHECK((coboundary_matrix(x, i + 1) * coboundary_matrix(x, i)).is_zero());
    for (int i = 0; i <= x.dim() - 1; ++i) {
      const auto a = random_cochain(rng, x, i);
      CHECK(coboundary(x, a).support == oracle::coboundary(x, i, a.support));
    }
  }
}

TEST_CASE("norm examples") {
  const auto d4 = build({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  const auto n1 = norms(d4, cochain(d4, 1, {{"a", "b"}}));
  CHECK(n1.support_size == 1);
  CHECK(n1.norm == q("1/6"));

  const auto k4 = build({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  const auto n2 = norms(k4, cochain(k4, 0, {{"a"}, {"b"}, {"c"}}));
  CHECK(n2.norm == q("3/4"));
  CHECK(n2.class_norm == q("1/4"));

  const auto k3 = build({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(norms(k3, cochain(k3, 1, {{"a", "b"}})).cocycle_coset_norm == 0);
}

TEST_CASE("cohomology") {
  CHECK(cohomology_dim(fixture("cycle_5"), 0) == 0);
  CHECK(cohomology_dim(fixture("cycle_5"), 1) == 1);
  CHECK(cohomology_dim(fixture("two_edges"), 0) == 1);
  const auto rp2 = fixture("rp2_6");
  CHECK(cohomology_dim(rp2, 0) == 0);
  CHECK(cohomology_dim(rp2, 1) == 1);
  CHECK(cohomology_dim(rp2, 2) == 1);
  const auto torus = fixture("torus_7");
  CHECK(cohomology_dim(torus, 1) == 2);
  CHECK(cohomology_dim(torus, 2) == 1);
  CHECK(cohomology_dim(fixture("octahedron_boundary"), 1) == 0);
  CHECK(cohomology_dim(fixture("octahedron_boundary"), 2) == 1);
}

namespace {

struct Frozen {
  const char* fixture;
  int i;
  const char* epsilon;
  const char* epsilon_tilde;
  const char* mu;
  const char* systole;  // "" when H^i = 0
};

// Computed by a definition-level brute force over all cochains, independent of this library.
const Frozen kFrozen[] = {
    {"complete_4_1", 0, "4/3", "4/3", "3/4", ""},
    {"complete_4_2", 0, "4/3", "4/3", "3/4", ""},
    {"complete_4_2", 1, "3", "3", "1/3", ""},
    {"complete_5_2", 0, "3/2", "3/2", "2/3", ""},
    {"complete_5_2", 1, "5/3", "5/3", "3/5", ""},
    {"complete_6_2", 0, "6/5", "6/5", "5/6", ""},
    {"complete_6_2", 1, "3/2", "3/2", "2/3", ""},
    {"two_triangles", 0, "4/3", "4/3", "3/4", ""},
    {"two_triangles", 1, "3", "3", "1/3", ""},
    {"cycle_3", 0, "2", "2", "1/2", ""},
    {"cycle_4", 0, "1", "1", "1", ""},
    {"cycle_5", 0, "1", "1", "1", ""},
    {"cycle_6", 0, "2/3", "2/3", "3/2", ""},
    {"cycle_7", 0, "2/3", "2/3", "3/2", ""},
    {"cycle_8", 0, "1/2", "1/2", "2", ""},
    {"petersen", 0, "2/3", "2/3", "3/2", ""},
    {"fano_incidence", 0, "2/3", "2/3", "3/2", ""},
    {"octahedron_boundary", 0, "1", "1", "1", ""},
    {"octahedron_boundary", 1, "1", "1", "1", ""},
    {"two_edges", 0, "0", "2", "1/2", "1/2"},
    {"rp2_6", 0, "6/5", "6/5", "5/6", ""},
    {"rp2_6", 1, "0", "3/2", "2/3", "1/3"},
    {"torus_7", 0, "4/3", "4/3", "3/4", ""},
};

}  // namespace

TEST_CASE("expansion constants match frozen brute-force values") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.fixture);
    CAPTURE(f.i);
    const auto x = fixture(f.fixture);
    const auto c = expansion_constants(x, f.i);
    REQUIRE(c.epsilon);
    REQUIRE(c.epsilon_tilde);
    REQUIRE(c.mu);
    CHECK(*c.epsilon == q(f.epsilon));
    CHECK(*c.epsilon_tilde == q(f.epsilon_tilde));
    CHECK(*c.mu == q(f.mu));
    CHECK(*c.mu == 1 / *c.epsilon_tilde);
    const auto s = systole(x, f.i);
    if (*f.systole) {
      REQUIRE(s);
      CHECK(s->norm == q(f.systole));
      CHECK(s->support_size == s->witness.support.count());
      CHECK(coboundary(x, s->witness).support.none());
    } else {
      CHECK_FALSE(s);
    }
  }
}

TEST_CASE("flag(2,3) constants") {
  const auto c = expansion_constants(flag_complex(2, 3), 0);
  CHECK(*c.epsilon == q("2/3"));
  CHECK(*c.mu == q("3/2"));
}

TEST_CASE("witnesses attain the reported constants") {
  for (const char* name : {"complete_4_2", "rp2_6", "petersen", "two_triangles"}) {
    const auto x = fixture(name);
    for (int i = 0; i < x.dim(); ++i) {
      const auto c = expansion_constants(x, i);
      if (c.epsilon && sgn(*c.epsilon) > 0) {
        REQUIRE(c.epsilon_witness);
        const auto n = norms(x, *c.epsilon_witness);
        CHECK(norm(x, coboundary(x, *c.epsilon_witness)) / n.class_norm == *c.epsilon);
      }
      REQUIRE(c.mu_witness);
      const auto& beta = *c.mu_witness;
      CHECK(beta.dim == i + 1);
      CHECK(norms(x, beta).class_norm == 0);  // β ∈ B^{i+1}
    }
  }
}

TEST_CASE("expansion constants agree with the enumeration oracle on random complexes") {
  std::mt19937_64 rng(33);
  int compared = 0;
  for (int t = 0; t < 40; ++t) {
    const auto x = random_pure_complex(rng, 7, 2);
    for (int i = 0; i < x.dim(); ++i) {
      if (x.count(i) > 16) continue;
      const auto c = expansion_constants(x, i);
      const auto o = oracle::expansion(x, i);
      CHECK(c.epsilon == o.epsilon);
      CHECK(c.epsilon_tilde == o.epsilon_tilde);
      CHECK(c.mu == o.mu);
      CHECK(static_cast<int>(c.dim_h) == o.dim_h());
      const auto s = systole(x, i);
      CHECK((s ? std::optional<Rational>(s->norm) : std::nullopt) == o.systole);
      ++compared;
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("norm inequalities") {
  std::mt19937_64 rng(4);
  const auto x = fixture("rp2_6");
  for (int t = 0; t < 200; ++t) {
    const auto a = random_cochain(rng, x, 1);
    const auto n = norms(x, a);
    CHECK(n.class_norm <= n.norm);
    CHECK(n.cocycle_coset_norm <= n.class_norm);
  }
}

TEST_CASE("disconnected graph has zero coboundary expansion") {
  const auto two = build({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
  const auto c = expansion_constants(two, 0);
  CHECK(*c.epsilon == 0);
  CHECK(c.dim_h == 1);
}

TEST_CASE("gromov certificate") {
  const auto d4 = fixture("complete_4_2");
  const auto r = expansion_report(d4);
  Rational max_mu(0);
  for (const auto& c : r.constants) max_mu = std::max(max_mu, *c.mu);
  CHECK(certify_gromov(d4, max_mu, q("1000")).ok());
  CHECK_FALSE(certify_gromov(d4, max_mu - q("1/100"), q("1/1000")).cofilling_ok());

  const auto rp2 = fixture("rp2_6");
  const auto at = certify_gromov(rp2, q("1"), q("1/3"));
  CHECK(at.ok());
  const auto above = certify_gromov(rp2, q("1"), q("1/3") + q("1/1000000"));
  CHECK(above.cofilling_ok());
  CHECK_FALSE(above.systole_ok());
  REQUIRE(above.levels.size() == 2);
  REQUIRE(above.levels[1].systole_witness);
  CHECK(norm(rp2, *above.levels[1].systole_witness) == q("1/3"));

  // connected expander graph with μ >= 1/ε0
  CHECK(certify_gromov(fixture("petersen"), q("3/2"), q("1/1000")).ok());
}

TEST_CASE("caps are enforced, not approximated") {
  SearchCaps tiny;
  tiny.class_log2 = 4;
  CHECK(error_of([&] { expansion_constants(fixture("complete_6_2"), 1, tiny); }) == ErrorCode::SearchSpaceTooLarge);
}
