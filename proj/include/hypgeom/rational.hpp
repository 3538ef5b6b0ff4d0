#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "hypgeom/errors.hpp"

namespace hypgeom {

using Rational = mpq_class;

/// Parses "p/q", "12", "-0.375" or "1.5e-3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  if (s.find('/') != std::string::npos) {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  }
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char ch = s[pos];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) --exponent;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch == 'e' || ch == 'E') {
      exponent += std::stol(s.substr(pos + 1));
      break;
    } else {
      throw DomainError("malformed rational literal: " + s);
    }
  }
  if (digits.empty()) throw DomainError("malformed rational literal: " + s);
  mpz_class num(digits, 10);
  mpz_class den = 1;
  mpz_class ten = 10;
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    num *= scale;
  } else {
    den = scale;
  }
  if (negative) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// The rational whose decimal expansion is the shortest round-trip
/// representation of x, so 0.1 maps to 1/10 rather than its binary value.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hypgeom
