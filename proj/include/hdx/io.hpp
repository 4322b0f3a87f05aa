#pragma once

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/local_structure.hpp"
#include "hdx/overlap.hpp"
#include "hdx/rational.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hdx {

/// Insertion-ordered, so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Throws ParseError with the parser's position on malformed text.
Json parse_json(std::string_view text);

/// {"facets": [["a","b","c"], ...]}. Labels may also be given as integers.
SimplicialComplex complex_from_json(const Json& j);
/// Canonical form: labels sorted within facets, facets sorted.
Json complex_to_json(const SimplicialComplex& x);

/// {"dim": i, "faces": [["a","b"], ...]}. Throws FaceNotPresent.
Cochain cochain_from_json(const SimplicialComplex& x, const Json& j);
Json cochain_to_json(const SimplicialComplex& x, const Cochain& c);

struct GeneratorSet {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};
/// {"degree": m, "generators": [[images], ...]}
GeneratorSet generators_from_json(const Json& j);

/// {"points": {"a": ["0/1", "1/2"], ...}}; coordinates may also be integers.
PointConfig points_from_json(const Json& j);
Json points_to_json(const PointConfig& p);

/// Tolerance attached to floating-point report values.
inline constexpr double kFloatTolerance = 1e-9;

/// {"exact": "rational", "value": "p/q", "decimal": "0.333333333333"}
Json rational_value(const Rational& r);
/// {"exact": "float±1e-09", "value": "%.12g"}
Json float_value(double v, double tol = kFloatTolerance);
std::string format_float(double v);

Json to_json(const SimplicialComplex& x, const ExpansionReport& r);
/// One row per reported quantity: dim,quantity,value,exactness.
std::string to_csv(const ExpansionReport& r);

Json to_json(const SimplicialComplex& x, const GromovCertificate& c);
Json to_json(const SimplicialComplex& x, const Cochain& input, const LocalMinimization& m);
Json to_json(const LemmaSuiteReport& r);
Json to_json(const SimplicialComplex& x, const OverlapResult& r);
Json to_json(const SimplicialComplex& x, const MonteCarloOverlap& r);

}  // namespace hdx
