#include "hdx/io.hpp"

#include "hdx/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hdx {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

std::string label_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::ParseError, "vertex labels must be strings or integers");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> sorted_labels(const SimplicialComplex& x, const Face& f) {
  auto labels = x.face_labels(f);
  std::sort(labels.begin(), labels.end());
  return labels;
}

Json faces_json(const SimplicialComplex& x, const Cochain& c) {
  std::vector<std::vector<std::string>> faces;
  const auto all = x.faces(c.dim);
  c.support.for_each_set([&](std::size_t k) { faces.push_back(sorted_labels(x, all[k])); });
  std::sort(faces.begin(), faces.end());
  return faces;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? rational_value(*r) : Json(nullptr); }

}  // namespace

SimplicialComplex complex_from_json(const Json& j) {
  const Json& facets = member(j, "facets");
  if (!facets.is_array()) throw Error(ErrorCode::ParseError, "\"facets\" must be an array");
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets) {
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "each facet must be an array");
    std::vector<std::string> labels;
    for (const auto& v : f) labels.push_back(label_of(v));
    out.push_back(std::move(labels));
  }
  return SimplicialComplex::from_facets(out);
}

Json complex_to_json(const SimplicialComplex& x) {
  Json j;
  j["facets"] = x.canonical_facets();
  return j;
}

Cochain cochain_from_json(const SimplicialComplex& x, const Json& j) {
  const Json& dim = member(j, "dim");
  if (!dim.is_number_integer()) throw Error(ErrorCode::ParseError, "\"dim\" must be an integer");
  const int i = dim.get<int>();
  if (i < 0 || i > x.dim()) throw Error(ErrorCode::DimensionOutOfRange, "cochain dimension " + std::to_string(i));
  Cochain c = Cochain::zero(x, i);
  const Json& faces = member(j, "faces");
  if (!faces.is_array()) throw Error(ErrorCode::ParseError, "\"faces\" must be an array");
  for (const auto& f : faces) {
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "each face must be an array");
    Face face;
    std::string shown;
    for (const auto& v : f) {
      const auto label = label_of(v);
      shown += (shown.empty() ? "" : ",") + label;
      auto idx = x.vertex_index(label);
      if (!idx) throw Error(ErrorCode::FaceNotPresent, "unknown vertex " + label);
      face.push_back(*idx);
    }
    std::sort(face.begin(), face.end());
    if (static_cast<int>(face.size()) != i + 1)
      throw Error(ErrorCode::WrongDimension, "face {" + shown + "} does not have " + std::to_string(i + 1) + " vertices");
    auto idx = x.index_of(face);
    if (!idx) throw Error(ErrorCode::FaceNotPresent, "{" + shown + "} is not a face");
    c.support.flip(*idx);
  }
  return c;
}

Json cochain_to_json(const SimplicialComplex& x, const Cochain& c) {
  Json j;
  j["dim"] = c.dim;
  j["faces"] = faces_json(x, c);
  return j;
}

GeneratorSet generators_from_json(const Json& j) {
  GeneratorSet g;
  const Json& degree = member(j, "degree");
  if (!degree.is_number_integer()) throw Error(ErrorCode::ParseError, "\"degree\" must be an integer");
  g.degree = degree.get<int>();
  const Json& gens = member(j, "generators");
  if (!gens.is_array()) throw Error(ErrorCode::ParseError, "\"generators\" must be an array");
  for (const auto& p : gens) {
    if (!p.is_array()) throw Error(ErrorCode::ParseError, "each generator must be an image list");
    std::vector<int> images;
    for (const auto& v : p) {
      if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "permutation images must be integers");
      images.push_back(v.get<int>());
    }
    if (static_cast<int>(images.size()) != g.degree)
      throw Error(ErrorCode::BadParams, "generator length differs from the degree");
    g.generators.push_back(std::move(images));
  }
  return g;
}

PointConfig points_from_json(const Json& j) {
  const Json& pts = member(j, "points");
  if (!pts.is_object()) throw Error(ErrorCode::ParseError, "\"points\" must be an object");
  PointConfig p;
  bool first = true;
  for (const auto& [label, coords] : pts.items()) {
    if (!coords.is_array()) throw Error(ErrorCode::ParseError, "coordinates of " + label + " must be an array");
    std::vector<Rational> c;
    for (const auto& v : coords) {
      if (v.is_string())
        c.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer())
        c.push_back(make_rational(v.get<std::int64_t>()));
      else
        throw Error(ErrorCode::ParseError, "coordinates must be rational strings or integers");
    }
    if (first) {
      p.dim = static_cast<int>(c.size());
      first = false;
    } else if (static_cast<int>(c.size()) != p.dim) {
      throw Error(ErrorCode::BadParams, "inconsistent point dimensions");
    }
    p.coords[label] = std::move(c);
  }
  return p;
}

Json points_to_json(const PointConfig& p) {
  Json pts = Json::object();
  for (const auto& [label, coords] : p.coords) {
    Json c = Json::array();
    for (const auto& r : coords) c.push_back(to_fraction_string(r));
    pts[label] = c;
  }
  Json j;
  j["points"] = pts;
  return j;
}

Json rational_value(const Rational& r) {
  Json j;
  j["exact"] = "rational";
  j["value"] = to_fraction_string(r);
  j["decimal"] = to_decimal_string(r, 12);
  return j;
}

std::string format_float(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json float_value(double v, double tol) {
  char tag[32];
  std::snprintf(tag, sizeof tag, "float±%.0e", tol);
  Json j;
  j["exact"] = tag;
  j["value"] = format_float(v);
  return j;
}

Json to_json(const SimplicialComplex& x, const ExpansionReport& r) {
  Json j;
  j["dimension"] = r.dim;
  j["f_vector"] = r.f_vector;
  j["cohomology_dims"] = r.cohomology;
  Json levels = Json::array();
  for (std::size_t k = 0; k < r.constants.size(); ++k) {
    const auto& c = r.constants[k];
    Json l;
    l["dim"] = c.dim;
    l["dim_h"] = c.dim_h;
    l["epsilon"] = optional_rational(c.epsilon);
    l["epsilon_tilde"] = optional_rational(c.epsilon_tilde);
    l["mu"] = optional_rational(c.mu);
    l["epsilon_witness"] = c.epsilon_witness ? faces_json(x, *c.epsilon_witness) : Json(nullptr);
    l["epsilon_tilde_witness"] = c.epsilon_tilde_witness ? faces_json(x, *c.epsilon_tilde_witness) : Json(nullptr);
    l["mu_witness"] = c.mu_witness ? faces_json(x, *c.mu_witness) : Json(nullptr);
    const auto& s = r.systoles[k];
    if (s) {
      Json sj;
      sj["norm"] = rational_value(s->norm);
      sj["support_size"] = s->support_size;
      sj["witness"] = faces_json(x, s->witness);
      l["systole"] = sj;
    } else {
      l["systole"] = nullptr;
    }
    levels.push_back(l);
  }
  j["levels"] = levels;
  if (r.spectral) {
    const auto& s = *r.spectral;
    Json sj;
    sj["vertices"] = s.vertices;
    sj["edges"] = s.edges;
    sj["components"] = s.components;
    sj["regular_degree"] = s.regular_degree ? Json(*s.regular_degree) : Json(nullptr);
    Json spec = Json::array();
    for (double ev : s.adjacency_spectrum) spec.push_back(float_value(ev));
    sj["adjacency_spectrum"] = spec;
    sj["laplacian_gap"] = s.laplacian_gap ? float_value(*s.laplacian_gap) : Json(nullptr);
    j["spectral"] = sj;
  }
  return j;
}

std::string to_csv(const ExpansionReport& r) {
  std::ostringstream out;
  out << "dim,quantity,value,exactness\n";
  for (std::size_t i = 0; i < r.cohomology.size(); ++i) out << i << ",dim_h," << r.cohomology[i] << ",integer\n";
  auto row = [&](int dim, const char* name, const std::optional<Rational>& v) {
    out << dim << ',' << name << ',' << (v ? to_fraction_string(*v) : "") << ",rational\n";
  };
  for (std::size_t k = 0; k < r.constants.size(); ++k) {
    const auto& c = r.constants[k];
    row(c.dim, "epsilon", c.epsilon);
    row(c.dim, "epsilon_tilde", c.epsilon_tilde);
    row(c.dim, "mu", c.mu);
    row(c.dim, "systole", r.systoles[k] ? std::optional<Rational>(r.systoles[k]->norm) : std::nullopt);
  }
  if (r.spectral && r.spectral->laplacian_gap)
    out << "-1,laplacian_gap," << format_float(*r.spectral->laplacian_gap) << ",float±1e-09\n";
  return out.str();
}

Json to_json(const SimplicialComplex& x, const GromovCertificate& c) {
  Json j;
  j["mu"] = rational_value(c.mu);
  j["eta"] = rational_value(c.eta);
  Json levels = Json::array();
  for (const auto& l : c.levels) {
    Json lj;
    lj["dim"] = l.dim;
    lj["mu_i"] = optional_rational(l.mu_i);
    lj["cofilling_ok"] = l.cofilling_ok;
    lj["systole"] = optional_rational(l.systole_i);
    lj["systole_ok"] = l.systole_ok;
    lj["cofilling_witness"] = l.cofilling_witness ? faces_json(x, *l.cofilling_witness) : Json(nullptr);
    lj["systole_witness"] = l.systole_witness ? faces_json(x, *l.systole_witness) : Json(nullptr);
    levels.push_back(lj);
  }
  j["levels"] = levels;
  j["ok"] = c.ok();
  return j;
}

Json to_json(const SimplicialComplex& x, const Cochain& input, const LocalMinimization& m) {
  Json j;
  j["dim"] = input.dim;
  j["input_norm"] = rational_value(norm(x, input));
  j["output_norm"] = rational_value(norm(x, m.minimized));
  j["steps"] = m.steps;
  j["minimized"] = cochain_to_json(x, m.minimized);
  j["gamma"] = m.gamma.dim >= 0 ? cochain_to_json(x, m.gamma) : Json(nullptr);
  return j;
}

Json to_json(const LemmaSuiteReport& r) {
  Json j;
  j["alpha_size"] = r.alpha_size;
  j["alpha_norm"] = rational_value(r.alpha_norm);
  j["literal_mode"] = r.literal_mode;
  j["disconnected_links"] = r.disconnected_links;
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    Json rj;
    rj["name"] = rec.name;
    rj["mode"] = rec.mode;
    rj["lhs"] = rec.lhs_exact ? rational_value(*rec.lhs_exact) : float_value(rec.lhs);
    rj["rhs"] = rec.rhs_exact ? rational_value(*rec.rhs_exact) : float_value(rec.rhs);
    rj["pass"] = rec.pass ? Json(*rec.pass) : Json(nullptr);
    rj["note"] = rec.note;
    recs.push_back(rj);
  }
  j["records"] = recs;
  j["all_pass"] = r.all_pass();
  return j;
}

namespace {

Json overlap_core(const SimplicialComplex& x, const OverlapResult& r) {
  Json j;
  j["max_depth"] = r.max_depth;
  j["facets"] = x.facets().size();
  j["fraction"] = rational_value(r.fraction);
  Json w = Json::array();
  for (const auto& c : r.witness) w.push_back(to_fraction_string(c));
  j["witness_point"] = w;
  Json cov = Json::array();
  for (auto t : r.covering_facets) cov.push_back(sorted_labels(x, x.facets()[t]));
  j["covering_facets"] = cov;
  j["candidates"] = r.candidates;
  j["containment"] = "closed";
  return j;
}

}  // namespace

Json to_json(const SimplicialComplex& x, const OverlapResult& r) {
  Json j = overlap_core(x, r);
  j["method"] = "exact-planar";
  return j;
}

Json to_json(const SimplicialComplex& x, const MonteCarloOverlap& r) {
  Json j = overlap_core(x, r.best);
  j["method"] = "monte-carlo-lower-bound";
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["hits"] = r.hits;
  j["hit_rate_wilson95"] = Json::array({float_value(r.wilson_low), float_value(r.wilson_high)});
  return j;
}

}  // namespace hdx
