#pragma once

// Exact integer/rational scalars backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbertkit {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) after every GMP operation.
using Rational = mpq_class;

/// Raised when text input cannot be parsed.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  return q.get_str(10);
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("bad integer literal '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
    throw ParseError("bad rational literal '" + s + "'");
  Integer den(d);
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return make_rational(Integer(strip_plus(n)), den);
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Binomial coefficient with the conventions C(a, b) = 0 for b < 0 or b > a >= 0.
/// Negative upper arguments use the generalized definition a(a-1)...(a-b+1)/b!.
inline Integer binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0 && b > a) return 0;
  Integer r;
  if (a >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  } else {
    mpz_bin_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
  }
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace hilbertkit
