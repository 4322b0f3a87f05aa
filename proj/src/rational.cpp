#include "hdx/rational.hpp"

#include "hdx/errors.hpp"

#include <cctype>

namespace hdx {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::BadParams, "zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rational& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = sgn(r) < 0;
  Rational a = abs(r);
  // round half away from zero
  mpz_class scaled = (a.get_num() * scale * 2 + a.get_den()) / (a.get_den() * 2);
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string fs = frac.get_str();
  if (static_cast<int>(fs.size()) < digits) fs.insert(0, static_cast<std::size_t>(digits) - fs.size(), '0');
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + fs;
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    return t;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    mpz_class d(strip_plus(den));
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    Rational r(mpz_class(strip_plus(num)), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(ip.begin());
    if (ip.empty()) ip = "0";
    if (fp.empty() || !valid_int(ip) || !valid_int(fp) || fp[0] == '-' || fp[0] == '+')
      throw Error(ErrorCode::ParseError, "bad decimal '" + s + "'");
    mpz_class den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    Rational r(mpz_class(ip) * den + mpz_class(fp), den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  if (!valid_int(s)) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  return Rational(mpz_class(strip_plus(s)));
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace hdx
