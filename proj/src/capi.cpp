#include "hdx/hdx.h"

#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/harness.hpp"
#include "hdx/io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct hdx_complex {
  hdx::SimplicialComplex x;
};

namespace {

thread_local std::string g_last_error;

hdx_status status_of(hdx::ErrorCode c) { return static_cast<hdx_status>(static_cast<int>(c) + 1); }

hdx_status fail(hdx_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
hdx_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return HDX_OK;
  } catch (const hdx::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HDX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HDX_ERR_INTERNAL, e.what());
  }
}

hdx::Json parse_or_empty(const char* text) {
  if (!text || !*text) return hdx::Json::object();
  return hdx::parse_json(text);
}

int param_int(const hdx::Json& p, const char* key) {
  if (!p.contains(key) || !p[key].is_number_integer())
    throw hdx::Error(hdx::ErrorCode::BadParams, std::string("missing integer parameter \"") + key + "\"");
  return p[key].get<int>();
}

hdx::Rational param_rational(const hdx::Json& v, const char* key) {
  if (v.is_string()) return hdx::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return hdx::make_rational(v.get<std::int64_t>());
  throw hdx::Error(hdx::ErrorCode::BadParams, std::string("\"") + key + "\" must be a rational string");
}

hdx::SimplicialComplex generate(const std::string& family, const hdx::Json& p) {
  if (family == "complete") return hdx::complete_complex(param_int(p, "n"), param_int(p, "d"));
  if (family == "flag") return hdx::flag_complex(param_int(p, "q"), param_int(p, "m"));
  if (family == "cycle") return hdx::fixture("cycle_" + std::to_string(param_int(p, "k")));
  if (family == "fixture") {
    if (!p.contains("name") || !p["name"].is_string())
      throw hdx::Error(hdx::ErrorCode::BadParams, "missing fixture \"name\"");
    return hdx::fixture(p["name"].get<std::string>());
  }
  if (family == "cayley") {
    const auto g = hdx::generators_from_json(p);
    const int max_dim = p.contains("max_dim") ? param_int(p, "max_dim") : 2;
    return hdx::cayley_clique_complex(g.degree, g.generators, max_dim, hdx::SearchCaps::from_env()).complex;
  }
  throw hdx::Error(hdx::ErrorCode::BadParams, "unknown family \"" + family + "\"");
}

bool check_args(const void* a, char** out) {
  if (!a || !out) {
    g_last_error = "null argument";
    return false;
  }
  *out = nullptr;
  return true;
}

}  // namespace

extern "C" {

const char* hdx_version(void) { return hdx::kVersion; }

const char* hdx_status_name(hdx_status status) {
  switch (status) {
    case HDX_OK:
      return "Ok";
    case HDX_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case HDX_ERR_INTERNAL:
      return "Internal";
    default:
      break;
  }
  const int k = static_cast<int>(status) - 1;
  if (k < 0 || k > static_cast<int>(hdx::ErrorCode::IoError)) return "Unknown";
  return hdx::error_name(static_cast<hdx::ErrorCode>(k)).data();
}

const char* hdx_last_error_message(void) { return g_last_error.c_str(); }

void hdx_string_free(char* s) { std::free(s); }

hdx_status hdx_complex_from_json(const char* json, hdx_complex** out) {
  if (!json || !out) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hdx_complex{hdx::complex_from_json(hdx::parse_json(json))}; });
}

hdx_status hdx_complex_generate(const char* family, const char* params_json, hdx_complex** out) {
  if (!family || !out) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hdx_complex{generate(family, parse_or_empty(params_json))}; });
}

hdx_status hdx_complex_to_json(const hdx_complex* x, char** out) {
  if (!check_args(x, out)) return HDX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup(hdx::complex_to_json(x->x).dump(2) + "\n"); });
}

int hdx_complex_dim(const hdx_complex* x) { return x ? x->x.dim() : -2; }

size_t hdx_complex_face_count(const hdx_complex* x, int i) {
  if (!x || i < -1 || i > x->x.dim()) return 0;
  return x->x.count(i);
}

void hdx_complex_free(hdx_complex* x) { delete x; }

hdx_status hdx_compute(const hdx_complex* x, int only_dim, int spectral, hdx_format format, char** out) {
  if (!check_args(x, out)) return HDX_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hdx::ReportOptions o;
    if (only_dim >= 0) o.only_dim = only_dim;
    o.spectral = spectral != 0;
    o.caps = hdx::SearchCaps::from_env();
    const auto r = hdx::expansion_report(x->x, o);
    *out = dup(format == HDX_FORMAT_CSV ? hdx::to_csv(r) : hdx::to_json(x->x, r).dump(2) + "\n");
  });
}

hdx_status hdx_certify(const hdx_complex* x, const char* mu, const char* eta, char** out, int* ok) {
  if (!check_args(x, out) || !mu || !eta) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto c = hdx::certify_gromov(x->x, hdx::parse_rational(mu), hdx::parse_rational(eta),
                                       hdx::SearchCaps::from_env());
    if (ok) *ok = c.ok() ? 1 : 0;
    *out = dup(hdx::to_json(x->x, c).dump(2) + "\n");
  });
}

hdx_status hdx_localmin(const hdx_complex* x, const char* cochain_json, char** out) {
  if (!check_args(x, out) || !cochain_json) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto a = hdx::cochain_from_json(x->x, hdx::parse_json(cochain_json));
    const auto m = hdx::locally_minimize(x->x, a, hdx::SearchCaps::from_env());
    *out = dup(hdx::to_json(x->x, a, m).dump(2) + "\n");
  });
}

hdx_status hdx_lemmas(const hdx_complex* x, const char* cochain_json, const char* params_json, char** out,
                      int* all_pass) {
  if (!check_args(x, out) || !cochain_json) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto a = hdx::cochain_from_json(x->x, hdx::parse_json(cochain_json));
    const auto pj = parse_or_empty(params_json);
    hdx::IsoperimetryParams p;
    for (const auto& [key, v] : pj.items()) {
      if (key == "epsilon")
        p.epsilon = param_rational(v, "epsilon");
      else if (key == "epsilon_prime")
        p.epsilon_prime = param_rational(v, "epsilon_prime");
      else if (key == "xi")
        p.xi = param_rational(v, "xi");
      else if (key == "q" && v.is_number_integer())
        p.q = v.get<int>();
      else
        throw hdx::Error(hdx::ErrorCode::BadParams, "unknown or malformed parameter \"" + key + "\"");
    }
    const auto r = hdx::dim2_lemma_suite(x->x, a, p, hdx::SearchCaps::from_env());
    if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
    *out = dup(hdx::to_json(r).dump(2) + "\n");
  });
}

hdx_status hdx_overlap(const hdx_complex* x, const char* points_json, size_t mc_samples, uint64_t seed, char** out) {
  if (!check_args(x, out) || !points_json) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto p = hdx::points_from_json(hdx::parse_json(points_json));
    if (mc_samples == 0)
      *out = dup(hdx::to_json(x->x, hdx::geometric_overlap_2d(x->x, p)).dump(2) + "\n");
    else
      *out = dup(hdx::to_json(x->x, hdx::geometric_overlap_mc(x->x, p, mc_samples, seed)).dump(2) + "\n");
  });
}

hdx_status hdx_verify(const char* config_json, char** json_out, char** csv_out, int* passed) {
  if (!json_out && !csv_out) return fail(HDX_ERR_INVALID_ARGUMENT, "no output requested");
  if (json_out) *json_out = nullptr;
  if (csv_out) *csv_out = nullptr;
  return guarded([&] {
    const auto config = config_json ? hdx::suite_config_from_json(hdx::parse_json(config_json)) : hdx::SuiteConfig{};
    const auto r = hdx::run_suite(config);
    if (passed) *passed = r.pass() ? 1 : 0;
    if (json_out) *json_out = dup(hdx::to_json(r).dump(2) + "\n");
    if (csv_out) *csv_out = dup(hdx::to_csv(r));
  });
}

hdx_status hdx_verify_outputs(const char* config_json, char** json_out, char** csv_out) {
  if (!config_json || !json_out || !csv_out) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  *json_out = *csv_out = nullptr;
  return guarded([&] {
    const auto c = hdx::suite_config_from_json(hdx::parse_json(config_json));
    *json_out = dup(c.json_out);
    *csv_out = dup(c.csv_out);
  });
}

hdx_status hdx_fixture_names(char** out) {
  if (!out) return fail(HDX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(hdx::Json(hdx::fixture_names()).dump()); });
}

}  // extern "C"
