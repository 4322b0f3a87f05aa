// hdx command-line front end. Talks to the library only through hdx.h.
#include "hdx/hdx.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError{"cannot write " + path};
}

void check(hdx_status s) {
  if (s != HDX_OK) throw CliError{hdx_last_error_message()};
}

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  ~Owned() { hdx_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Complex {
  hdx_complex* h = nullptr;
  Complex() = default;
  Complex(const Complex&) = delete;
  Complex(Complex&& o) noexcept : h(std::exchange(o.h, nullptr)) {}
  ~Complex() { hdx_complex_free(h); }
};

Complex load_complex(const std::string& path) {
  Complex c;
  check(hdx_complex_from_json(read_file(path).c_str(), &c.h));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact F2 expansion toolkit for finite simplicial complexes"};
  app.set_version_flag("--version", std::string(hdx_version()));
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a complex: complete, flag, cycle, cayley or fixture");
  std::string family, out_path, name, generators_path;
  std::optional<int> n, d, q, m, k, max_dim;
  gen->add_option("family", family, "complete | flag | cycle | cayley | fixture")->required();
  gen->add_option("--n", n, "vertices (complete)");
  gen->add_option("--d", d, "dimension (complete)");
  gen->add_option("--q", q, "field size (flag)");
  gen->add_option("--m", m, "ambient dimension (flag)");
  gen->add_option("--k", k, "length (cycle)");
  gen->add_option("--name", name, "fixture name");
  gen->add_option("--generators", generators_path, "generator file (cayley)");
  gen->add_option("--max-dim", max_dim, "clique dimension cap (cayley)");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  // compute
  auto* compute = app.add_subcommand("compute", "Expansion constants, cohomology, systoles and spectra");
  std::string complex_path;
  std::optional<int> only_i;
  bool all = false, csv = false, no_spectral = false;
  compute->add_option("complex", complex_path, "complex file")->required()->check(CLI::ExistingFile);
  auto* opt_i = compute->add_option("--i", only_i, "single dimension");
  compute->add_flag("--all", all, "every dimension 0..d-1 (default)")->excludes(opt_i);
  compute->add_flag("--csv", csv, "CSV instead of JSON");
  compute->add_flag("--no-spectral", no_spectral, "skip the spectral summary");
  compute->add_option("-o,--output", out_path, "output file (default stdout)");

  // certify
  auto* certify = app.add_subcommand("certify", "Check the cofilling and systolic hypotheses");
  std::string mu, eta;
  certify->add_option("complex", complex_path, "complex file")->required()->check(CLI::ExistingFile);
  certify->add_option("--mu", mu, "cofilling bound, e.g. 3/2")->required();
  certify->add_option("--eta", eta, "systolic bound, e.g. 1/5")->required();
  certify->add_option("-o,--output", out_path, "output file (default stdout)");

  // localmin
  auto* localmin = app.add_subcommand("localmin", "Locally minimize a cochain within its coboundary coset");
  std::string cochain_path;
  localmin->add_option("complex", complex_path, "complex file")->required()->check(CLI::ExistingFile);
  localmin->add_option("cochain", cochain_path, "cochain file")->required()->check(CLI::ExistingFile);
  localmin->add_option("-o,--output", out_path, "output file (default stdout)");

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "Counting identities and isoperimetric bounds for a 1-cochain");
  std::string eps, eps_prime, xi;
  lemmas->add_option("complex", complex_path, "2-dimensional complex file")->required()->check(CLI::ExistingFile);
  lemmas->add_option("cochain", cochain_path, "1-cochain file")->required()->check(CLI::ExistingFile);
  lemmas->add_option("--eps", eps, "thin/thick parameter (default 1/10)");
  lemmas->add_option("--eps-prime", eps_prime, "link expansion slack (default 1/10)");
  lemmas->add_option("--xi", xi, "thin contribution slack (default 1/10)");
  lemmas->add_option("--q", q, "literal link parameter");
  lemmas->add_option("-o,--output", out_path, "output file (default stdout)");

  // overlap
  auto* overlap = app.add_subcommand("overlap", "Maximum point depth of the affine facet images");
  std::string points_path;
  bool exact = false;
  std::size_t mc = 0;
  std::uint64_t seed = 1;
  overlap->add_option("complex", complex_path, "complex file")->required()->check(CLI::ExistingFile);
  overlap->add_option("points", points_path, "point configuration file")->required()->check(CLI::ExistingFile);
  auto* opt_exact = overlap->add_flag("--exact", exact, "exact planar search (default)");
  overlap->add_option("--mc", mc, "Monte Carlo lower bound with N samples")->excludes(opt_exact)->check(
      CLI::PositiveNumber);
  overlap->add_option("--seed", seed, "Monte Carlo seed");
  overlap->add_option("-o,--output", out_path, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string config_path;
  std::optional<std::uint64_t> verify_seed;
  verify->add_option("--config", config_path, "suite configuration file")->check(CLI::ExistingFile);
  verify->add_option("--seed", verify_seed, "override the configured seed");
  verify->add_flag("--csv", csv, "CSV to stdout instead of JSON");
  verify->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Owned result;
    int verdict = kExitOk;

    if (*gen) {
      nlohmann::json p = nlohmann::json::object();
      if (family == "cayley") {
        if (generators_path.empty()) throw CliError{"cayley needs --generators FILE"};
        p = nlohmann::json::parse(read_file(generators_path), nullptr, false);
        if (p.is_discarded() || !p.is_object()) throw CliError{generators_path + ": malformed generator file"};
      }
      if (n) p["n"] = *n;
      if (d) p["d"] = *d;
      if (q) p["q"] = *q;
      if (m) p["m"] = *m;
      if (k) p["k"] = *k;
      if (max_dim) p["max_dim"] = *max_dim;
      if (!name.empty()) p["name"] = name;
      Complex c;
      check(hdx_complex_generate(family.c_str(), p.dump().c_str(), &c.h));
      check(hdx_complex_to_json(c.h, &result.p));
    } else if (*compute) {
      const auto c = load_complex(complex_path);
      check(hdx_compute(c.h, only_i.value_or(-1), no_spectral ? 0 : 1, csv ? HDX_FORMAT_CSV : HDX_FORMAT_JSON,
                        &result.p));
    } else if (*certify) {
      const auto c = load_complex(complex_path);
      int ok = 0;
      check(hdx_certify(c.h, mu.c_str(), eta.c_str(), &result.p, &ok));
      if (!ok) verdict = kExitCheckFailed;
    } else if (*localmin) {
      const auto c = load_complex(complex_path);
      check(hdx_localmin(c.h, read_file(cochain_path).c_str(), &result.p));
    } else if (*lemmas) {
      const auto c = load_complex(complex_path);
      nlohmann::json p = nlohmann::json::object();
      if (!eps.empty()) p["epsilon"] = eps;
      if (!eps_prime.empty()) p["epsilon_prime"] = eps_prime;
      if (!xi.empty()) p["xi"] = xi;
      if (q) p["q"] = *q;
      int ok = 0;
      check(hdx_lemmas(c.h, read_file(cochain_path).c_str(), p.dump().c_str(), &result.p, &ok));
      if (!ok) verdict = kExitCheckFailed;
    } else if (*overlap) {
      const auto c = load_complex(complex_path);
      check(hdx_overlap(c.h, read_file(points_path).c_str(), mc, seed, &result.p));
    } else if (*verify) {
      std::string config = config_path.empty() ? "{}" : read_file(config_path);
      if (verify_seed) {
        auto j = nlohmann::ordered_json::parse(config, nullptr, false);
        if (j.is_discarded() || !j.is_object()) throw CliError{config_path + ": malformed configuration"};
        j["seed"] = *verify_seed;
        config = j.dump();
      }
      Owned json_path, csv_path, json_text, csv_text;
      check(hdx_verify_outputs(config.c_str(), &json_path.p, &csv_path.p));
      int passed = 0;
      check(hdx_verify(config.c_str(), &json_text.p, &csv_text.p, &passed));
      if (!json_path.str().empty()) write_output(json_path.str(), json_text.str());
      if (!csv_path.str().empty()) write_output(csv_path.str(), csv_text.str());
      std::swap(result.p, csv ? csv_text.p : json_text.p);
      if (!passed) verdict = kExitCheckFailed;
    }

    write_output(out_path, result.str());
    return verdict;
  } catch (const CliError& e) {
    std::cerr << "hdx: " << e.message << "\n";
    return kExitUsage;
  }
}
