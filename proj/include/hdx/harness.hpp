#pragma once

#include "hdx/caps.hpp"
#include "hdx/complex.hpp"
#include "hdx/io.hpp"
#include "hdx/local_structure.hpp"
#include "hdx/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hdx {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
  std::vector<std::string> fixtures{"rp2_6",     "cycle_5",      "cycle_6",      "petersen",
                                    "fano_incidence", "octahedron_boundary", "torus_7", "complete_4_1",
                                    "complete_4_2",   "complete_5_2", "two_triangles", "two_edges"};
  std::uint64_t seed = 1;
  int random_complexes = 40;
  int random_graphs = 20;
  int cochain_samples = 100;
  int localmin_samples = 40;
  int coset_instances = 20;
  int overlap_instances = 6;
  SearchCaps caps = SearchCaps::from_env();
  IsoperimetryParams params;
  Rational certify_mu{10};
  Rational certify_eta{1, 10};
  std::string json_out;
  std::string csv_out;
};

/// Keys: fixtures, seed, random_complexes, random_graphs, cochain_samples,
/// localmin_samples, coset_instances, overlap_instances, caps ("k=v,..."),
/// epsilon, epsilon_prime, xi, q, certify_mu, certify_eta, json_out, csv_out.
/// Throws ConfigError on unknown keys, bad values or an empty fixture list.
SuiteConfig suite_config_from_json(const Json& j);

struct SuiteCheck {
  std::string check_id;
  /// The formula or property checked, or "plumbing".
  std::string anchor;
  std::string inputs;
  Json lhs;
  Json rhs;
  /// "pass", "fail", "skipped" or "info" (report-only).
  std::string status;
  std::string note;
};

struct SuiteReport {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;  // ordered by check_id

  bool pass() const;
  std::size_t count(const std::string& status) const;
};

/// Runs every check; failures are recorded in the report, never thrown.
/// Throws ConfigError for an empty fixture list or unknown fixture names.
SuiteReport run_suite(const SuiteConfig& config);

Json to_json(const SuiteReport& r);
/// One row per check: check_id,anchor,status,lhs,rhs,exactness,inputs,note.
std::string to_csv(const SuiteReport& r);

/// {"exact": "integer", "value": "n"}
Json integer_value(std::int64_t n);

// Seeded instance generators shared by the suite and the tests.

/// Pure complex of dimension 1..max_dim on at most max_vertices vertices.
SimplicialComplex random_pure_complex(std::mt19937_64& rng, int max_vertices, int max_dim);
/// G(n, p) graph on n vertices as (n, edge list).
std::vector<std::pair<std::size_t, std::size_t>> random_graph(std::mt19937_64& rng, std::size_t n, double p);
/// Uniformly random i-cochain with a random density.
Cochain random_cochain(std::mt19937_64& rng, const SimplicialComplex& x, int i);

}  // namespace hdx
