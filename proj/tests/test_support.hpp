#pragma once

// Shared generators for property-style tests. All draws come straight from the
// engine so sequences are identical across standard libraries.

#include "hilbertkit/chern.hpp"
#include "hilbertkit/grobner.hpp"
#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/rational.hpp"
#include "hilbertkit/reductions.hpp"
#include "hilbertkit/transversality.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hilbertkit::testing {

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

/// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  long p = uniform_int(rng, -bound, bound);
  long q = uniform_int(rng, 1, bound);
  return make_rational(p, q);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long bound = 9) {
  Rational r;
  do r = random_rational(rng, bound);
  while (r == 0);
  return r;
}

/// Pairwise distinct random rationals.
inline std::vector<Rational> random_distinct(std::mt19937_64& rng, std::size_t count, long bound = 9) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r = random_rational(rng, bound);
    bool dup = false;
    for (const auto& o : out) dup = dup || o == r;
    if (!dup) out.push_back(r);
  }
  return out;
}

/// Random polynomial with up to `terms` terms of total degree <= max_deg.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                             unsigned terms, unsigned max_deg) {
  MultiPoly p(vars);
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    unsigned budget = static_cast<unsigned>(uniform_int(rng, 0, max_deg));
    for (unsigned k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(vars.size()) - 1))];
    p.add_term(e, random_rational(rng, 5));
  }
  return p;
}

/// Dense homogeneous polynomial of degree d with random small integer coefficients.
MultiPoly random_form(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned d) {
  MultiPoly f(vars);
  for (const auto& e : monomials_of_degree(vars.size(), d)) f.add_term(e, Rational(uniform_int(rng, -5, 5)));
  if (f.is_zero()) f.add_term(monomials_of_degree(vars.size(), d)[0], 1);
  return f;
}

/// Dense polynomial of total degree <= d with random rational coefficients and a
/// nonzero coefficient on every top-degree monomial.
MultiPoly random_dense(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned d) {
  MultiPoly f(vars);
  for (unsigned k = 0; k <= d; ++k)
    for (const auto& e : monomials_of_degree(vars.size(), k))
      f.add_term(e, k == d ? random_nonzero_rational(rng) : random_rational(rng));
  return f;
}

inline GrassPoint random_grass_point(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  while (true) {
    GrassPoint A{QMatrix(m + 1, n + 1)};
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j <= n; ++j) A.span(i, j) = uniform_int(rng, -2, 2);
    if (rank(A.span) == m + 1) return A;
  }
}

/// A subspace spanned by random combinations of only a few flag vectors, so that
/// non-generic cells are hit often.
inline GrassPoint special_grass_point(std::mt19937_64& rng, const Flag& flag, std::size_t m) {
  const std::size_t n = flag.n();
  while (true) {
    GrassPoint A{QMatrix(m + 1, n + 1)};
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        if (uniform_int(rng, 0, 2) != 0) continue;
        Rational w = uniform_int(rng, -3, 3);
        for (std::size_t c = 0; c <= n; ++c) A.span(i, c) += w * flag.basis()(c, j);
      }
    if (rank(A.span) == m + 1) return A;
  }
}

/// Every ordered degree tuple with n <= 6, r <= min(3, n), d_i <= 4.
inline std::vector<CompleteIntersection> ci_grid() {
  std::vector<CompleteIntersection> out;
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned r = 0; r <= std::min(3u, n); ++r) {
      std::vector<unsigned> d(r, 1);
      while (true) {
        out.emplace_back(n, d);
        std::size_t i = 0;
        while (i < r && d[i] == 4) d[i++] = 1;
        if (i == r) break;
        ++d[i];
      }
    }
  return out;
}

/// Non-decreasing degree tuples with n <= 4, 1 <= r <= min(3, n), d_i <= 3.
inline std::vector<CompleteIntersection> ci_small_subgrid() {
  std::vector<CompleteIntersection> out;
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned r = 1; r <= std::min(3u, n); ++r) {
      std::vector<unsigned> d(r, 1);
      while (true) {
        out.emplace_back(n, d);
        std::size_t i = r;
        while (i > 0 && d[i - 1] == 3) --i;
        if (i == 0) break;
        unsigned v = d[i - 1] + 1;
        for (std::size_t j = i - 1; j < r; ++j) d[j] = v;
      }
    }
  return out;
}

/// 50 pinned formulas with 4..10 variables and 3..15 clauses of width <= 3.
inline std::vector<CnfFormula> pinned_cnfs() {
  std::vector<CnfFormula> out;
  for (unsigned i = 0; i < 50; ++i) {
    unsigned n = 4 + i % 7;
    unsigned clauses = 3 + (i * 7) % 13;
    unsigned width = 1 + (i % 5 == 0 ? 1 : 2);
    out.push_back(random_cnf(n, clauses, width, 1000 + i));
  }
  return out;
}

}  // namespace hilbertkit::testing
