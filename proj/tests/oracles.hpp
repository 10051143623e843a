#pragma once

// Independent reference computations used only by tests. Nothing here calls into the
// code path it is used to check.

#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace hilbertkit::oracle {

/// p(k) by the coin-change recurrence over part sizes.
inline std::size_t partition_count(unsigned k) {
  std::vector<std::size_t> ways(k + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= k; ++part)
    for (unsigned s = part; s <= k; ++s) ways[s] += ways[s - part];
  return ways[k];
}

/// Coefficients of t/(1 - e^{-t}) by long division: sum_j b_j a_{i-j} = [i == 0] with
/// a_i = (-1)^i / (i+1)!.
inline std::vector<Rational> todd_series_by_long_division(std::size_t K) {
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i <= K; ++i) {
    Rational v = make_rational(Integer(1), factorial(static_cast<unsigned>(i + 1)));
    a.push_back(i % 2 ? Rational(-v) : v);
  }
  for (std::size_t i = 0; i <= K; ++i) {
    Rational rhs = (i == 0) ? Rational(1) : Rational(0);
    for (std::size_t j = 0; j < i; ++j) rhs -= b[j] * a[i - j];
    b.push_back(rhs / a[0]);
  }
  return b;
}

namespace detail {

inline MultiPoly truncate_degree(const MultiPoly& f, unsigned max_deg) {
  MultiPoly r(f.variables());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) <= max_deg) r.add_term(e, c);
  return r;
}

inline MultiPoly elementary(const std::vector<std::string>& vars, unsigned k) {
  const std::size_t n = vars.size();
  MultiPoly e(vars);
  if (k > n) return e;
  std::vector<unsigned> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1u);
  do {
    e.add_term(Exponents(pick.begin(), pick.end()), 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return e;
}

}  // namespace detail

/// Rewrites a symmetric polynomial in t1..tm as a polynomial in the elementary
/// symmetric functions c1..cm, by repeatedly cancelling the lex-leading term.
inline MultiPoly symmetric_to_elementary(MultiPoly f, const std::vector<std::string>& out_vars) {
  const std::size_t m = f.nvars();
  std::vector<MultiPoly> e;
  for (unsigned k = 0; k <= m; ++k) e.push_back(detail::elementary(f.variables(), k));
  MultiPoly result(out_vars);
  while (!f.is_zero()) {
    auto lead = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
      if (it->first > lead->first) lead = it;
    Exponents a = lead->first;
    Rational c = lead->second;
    MultiPoly prod = MultiPoly::constant(f.variables(), c);
    Exponents ce(out_vars.size(), 0);
    for (std::size_t k = 1; k <= m; ++k) {
      unsigned power = a[k - 1] - (k < m ? a[k] : 0u);
      ce[k - 1] = power;
      prod *= e[k].pow(power);
    }
    f -= prod;
    result.add_term(ce, c);
  }
  return result;
}

/// T_m from its definition: the degree-m part of f(t_1)...f(t_m), f = t/(1-e^{-t}),
/// rewritten in elementary symmetric functions.
inline MultiPoly todd_direct(unsigned m) {
  auto cvars = indexed_variables("c", m, 1);
  if (m == 0) return MultiPoly::constant(cvars, 1);
  auto tvars = indexed_variables("t", m, 1);
  auto b = todd_series_by_long_division(m);
  MultiPoly prod = MultiPoly::constant(tvars, 1);
  for (std::size_t i = 0; i < m; ++i) {
    MultiPoly f(tvars);
    for (unsigned j = 0; j <= m; ++j) {
      Exponents e(m, 0);
      e[i] = j;
      f.add_term(e, b[j]);
    }
    prod = detail::truncate_degree(prod * f, m);
  }
  MultiPoly top(tvars);
  for (const auto& [e, c] : prod.terms())
    if (total_degree(e) == m) top.add_term(e, c);
  return symmetric_to_elementary(top, cvars);
}

/// Number of degree-k monomials in `nvars` variables not divisible by any generator.
inline std::size_t staircase_count(const std::vector<Exponents>& gens, std::size_t nvars, unsigned k) {
  std::size_t count = 0;
  Exponents e(nvars, 0);
  auto divides = [](const Exponents& g, const Exponents& x) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > x[i]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      e[var] = left;
      bool standard = true;
      for (const auto& g : gens) standard = standard && !divides(g, e);
      if (standard) ++count;
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  if (nvars == 0) return (k == 0 && gens.empty()) ? 1 : 0;
  rec(rec, 0, k);
  return count;
}

}  // namespace hilbertkit::oracle
