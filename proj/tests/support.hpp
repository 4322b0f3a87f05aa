#pragma once

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/errors.hpp"
#include "hdx/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace hdx::test {

inline Rational q(const char* s) { return parse_rational(s); }

inline SimplicialComplex build(std::initializer_list<std::initializer_list<const char*>> facets) {
  std::vector<std::vector<std::string>> f;
  for (auto fa : facets) f.emplace_back(fa.begin(), fa.end());
  return SimplicialComplex::from_facets(f);
}

inline Face face_of(const SimplicialComplex& x, std::initializer_list<const char*> labels) {
  Face f;
  for (const char* l : labels) f.push_back(*x.vertex_index(l));
  std::sort(f.begin(), f.end());
  return f;
}

/// Cochain from faces given by vertex labels, e.g. {{"a","b"},{"a","c"}}.
inline Cochain cochain(const SimplicialComplex& x, int i, std::initializer_list<std::initializer_list<const char*>> faces) {
  Cochain c = Cochain::zero(x, i);
  for (auto f : faces) c.support.set(*x.index_of(face_of(x, f)));
  return c;
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("no hdx::Error thrown");
}

}  // namespace hdx::test
