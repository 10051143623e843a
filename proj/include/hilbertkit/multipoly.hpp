#pragma once

// Sparse multivariate polynomials over Q with named variables.

#include "hilbertkit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbertkit {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded-lexicographic "greater than": higher total degree first, ties broken
/// lexicographically with the first variable largest.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }

  static MultiPoly variable(std::vector<std::string> variables, std::size_t index) {
    MultiPoly p(std::move(variables));
    if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
  }

  static MultiPoly monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
    MultiPoly p(std::move(variables));
    p.add_term(e, c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && hilbertkit::total_degree(terms_.begin()->first) == 0);
  }

  Rational constant_term() const { return coefficient(Exponents(nvars(), 0)); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(hilbertkit::total_degree(terms_.begin()->first));
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.vars_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(vars_, 1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Throws std::invalid_argument unless both operands share the variable list.
  void check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable-list mismatch");
  }

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Result of a homogeneity query. The zero polynomial is homogeneous of any degree.
class Homogeneity {
public:
  static Homogeneity mixed() { return Homogeneity(Kind::kMixed, 0); }
  static Homogeneity any() { return Homogeneity(Kind::kAny, 0); }
  static Homogeneity of_degree(unsigned d) { return Homogeneity(Kind::kDegree, d); }

  bool homogeneous() const { return kind_ != Kind::kMixed; }
  bool any_degree() const { return kind_ == Kind::kAny; }
  bool has_degree() const { return kind_ == Kind::kDegree; }
  unsigned degree() const {
    if (kind_ != Kind::kDegree) throw std::logic_error("no single homogeneous degree");
    return degree_;
  }
  bool compatible_with(unsigned d) const {
    return kind_ == Kind::kAny || (kind_ == Kind::kDegree && degree_ == d);
  }

private:
  enum class Kind { kDegree, kAny, kMixed };
  Homogeneity(Kind k, unsigned d) : kind_(k), degree_(d) {}
  Kind kind_;
  unsigned degree_;
};

inline Homogeneity is_homogeneous(const MultiPoly& f) {
  if (f.is_zero()) return Homogeneity::any();
  unsigned d = total_degree(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) != d) return Homogeneity::mixed();
  return Homogeneity::of_degree(d);
}

inline MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw std::out_of_range("variable index out of range");
  MultiPoly r(f.variables());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

/// Evaluates f with values[i] substituted for the i-th variable in any commutative
/// ring R that accepts left multiplication by a Rational.
template <class R>
R evaluate_in(const MultiPoly& f, std::span<const R> values, const R& one) {
  if (values.size() != f.nvars()) throw std::invalid_argument("evaluation point has wrong arity");
  R acc = one - one;
  for (const auto& [e, c] : f.terms()) {
    R term = one;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * values[i];
    acc = acc + c * term;
  }
  return acc;
}

inline Rational evaluate(const MultiPoly& f, std::span<const Rational> point) {
  if (point.size() != f.nvars()) throw std::invalid_argument("evaluation point has wrong arity");
  Rational acc = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= rational_pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

/// Re-expresses f over a different variable list. Every variable of f that occurs
/// in a term must be present in `target`; variables new to `target` get exponent 0.
inline MultiPoly with_variables(const MultiPoly& f, const std::vector<std::string>& target) {
  std::vector<std::size_t> where(f.nvars(), target.size());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto it = std::find(target.begin(), target.end(), f.variables()[i]);
    if (it != target.end()) where[i] = static_cast<std::size_t>(it - target.begin());
  }
  MultiPoly r(target);
  for (const auto& [e, c] : f.terms()) {
    Exponents ne(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] == target.size())
        throw std::invalid_argument("variable '" + f.variables()[i] + "' missing from target list");
      ne[where[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

/// Sets variable `var` to `value` and removes it from the variable list.
inline MultiPoly substitute_and_drop(const MultiPoly& f, std::size_t var, const Rational& value) {
  if (var >= f.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<std::string> vars = f.variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(var));
  MultiPoly r(vars);
  for (const auto& [e, c] : f.terms()) {
    Exponents ne = e;
    ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(var));
    r.add_term(ne, c * rational_pow(value, e[var]));
  }
  return r;
}

/// Setting the homogenizing variable to one.
inline MultiPoly dehomogenize(const MultiPoly& f, std::size_t var) {
  return substitute_and_drop(f, var, 1);
}

/// Standard variable names x0..x{count-1}.
inline std::vector<std::string> indexed_variables(const std::string& stem, std::size_t count,
                                                  std::size_t first = 0) {
  std::vector<std::string> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.push_back(stem + std::to_string(first + i));
  return v;
}

}  // namespace hilbertkit
