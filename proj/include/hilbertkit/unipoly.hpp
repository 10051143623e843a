#pragma once

// Dense univariate polynomials over Q.

#include "hilbertkit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbertkit {

class UniPoly {
public:
  UniPoly() = default;
  /// coeffs[i] multiplies T^i.
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(unsigned degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
  }
  /// T + a
  static UniPoly linear(const Rational& a) { return UniPoly({a, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient by (1 - T); requires the value at 1 to vanish.
  UniPoly divide_by_one_minus_t() const {
    if ((*this)(1) != 0) throw std::domain_error("polynomial not divisible by (1 - T)");
    if (c_.empty()) return {};
    // Q = P / (1 - T)  <=>  P = Q - T Q, so Q_i = P_i + Q_{i-1}.
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      run += c_[i];
      q[i] = run;
    }
    return UniPoly(std::move(q));
  }

  /// Text form in the indeterminate `var`, e.g. "1/2T^2+3/2T+1"; "0" for zero.
  std::string to_string(const std::string& var = "T") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& a = c_[i];
      if (a == 0) continue;
      Rational mag = abs(a);
      if (a < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      if (i == 0 || mag != 1) out += hilbertkit::to_string(mag);
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// binom(T + shift, n) = (T+shift)(T+shift-1)...(T+shift-n+1)/n! as a polynomial in T.
inline UniPoly binom_poly(long shift, unsigned n) {
  UniPoly p = UniPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) p *= UniPoly::linear(Rational(shift - static_cast<long>(i)));
  return p * make_rational(Integer(1), factorial(n));
}

}  // namespace hilbertkit
