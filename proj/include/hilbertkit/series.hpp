#pragma once

// Truncated univariate power series: classes modulo h^K.

#include "hilbertkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hilbertkit {

class TruncSeries {
public:
  TruncSeries() = default;
  /// Zero series of order K.
  explicit TruncSeries(std::size_t order) : c_(order, Rational(0)) {}
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order, Rational(0));
  }

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    if (order > 0) s.c_[0] = 1;
    return s;
  }
  /// c * h^k truncated.
  static TruncSeries monomial(std::size_t order, std::size_t k, const Rational& c) {
    TruncSeries s(order);
    if (k < order) s.c_[k] = c;
    return s;
  }
  /// exp(a h) truncated.
  static TruncSeries exp(std::size_t order, const Rational& a) {
    TruncSeries s(order);
    Rational term = 1;
    for (std::size_t i = 0; i < order; ++i) {
      s.c_[i] = term;
      term *= a / static_cast<long>(i + 1);
    }
    return s;
  }

  std::size_t order() const { return c_.size(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
  friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
  friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.order());
    const std::size_t k = a.order();
    for (std::size_t i = 0; i < k; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < k; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries pow(unsigned e) const {
    TruncSeries r = one(order());
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Multiplicative inverse; throws std::domain_error if the constant term vanishes.
  TruncSeries inverse() const {
    if (c_.empty()) return *this;
    if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    TruncSeries r(order());
    Rational inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      Rational acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
      r.c_[n] = -acc * inv0;
    }
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
  void check(const TruncSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("truncation orders differ");
  }
  std::vector<Rational> c_;
};

}  // namespace hilbertkit
