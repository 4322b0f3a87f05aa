#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hdx {

/// Exact arbitrary-precision rational (GMP).
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" in lowest terms; integers render as "p/1" so the form is uniform.
std::string to_fraction_string(const Rational& r);

/// Fixed 12-digit decimal rendering, rounded half away from zero.
std::string to_decimal_string(const Rational& r, int digits = 12);

/// Accepts "p/q", "p", or a finite decimal such as "0.1" or "-2.5".
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace hdx
