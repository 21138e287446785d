#include "berncone/rational.hpp"

#include <cctype>
#include <cstdio>

#include "berncone/errors.hpp"

namespace berncone {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t begin = 0;
  if (begin < text.size() && (text[begin] == '+' || text[begin] == '-')) ++begin;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, begin, text.size());
  } else {
    ok = all_digits(text, begin, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw ParseError("not a rational literal: '" + text + "'");
  if (slash != std::string::npos) {
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  }
  return Rational(text);  // GMP canonicalises on construction
}

std::string to_fraction_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string numerator_string(const Rational& value) { return numerator(value).str(); }

std::string denominator_string(const Rational& value) { return denominator(value).str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_float_string(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", to_double(value));
  // Prefer the shortest representation that still round-trips.
  for (int precision = 1; precision <= 16; ++precision) {
    char shorter[64];
    std::snprintf(shorter, sizeof(shorter), "%.*g", precision, to_double(value));
    double back = 0.0;
    std::sscanf(shorter, "%lf", &back);
    if (back == to_double(value)) return shorter;
  }
  return buf;
}

}  // namespace berncone
