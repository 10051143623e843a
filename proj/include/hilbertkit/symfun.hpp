#pragma once

// Symmetric-function machinery: Jacobi-Trudi type determinants Delta_lambda(c), the
// Todd series coefficients, Todd and Chern-character polynomials, Schur polynomials and
// the coefficients that express Hilbert polynomials through projective characters.

#include "hilbertkit/matrix.hpp"
#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/partition.hpp"
#include "hilbertkit/rational.hpp"
#include "hilbertkit/series.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace hilbertkit {

/// A sequence c_0 = 1, c_1, c_2, ... over a commutative ring R with c_i = 0 for i < 0.
/// A terminating sequence is zero beyond its stored values (e.g. Chern classes of a
/// bundle); a non-terminating one throws when read past its stored prefix.
template <class R>
class CoeffSeq {
public:
  CoeffSeq(std::vector<R> values, bool terminating)
      : values_(std::move(values)), terminating_(terminating) {
    if (values_.empty()) throw std::invalid_argument("coefficient sequence needs c_0");
    if constexpr (std::is_same_v<R, Rational> || std::is_same_v<R, Integer>) {
      if (values_[0] != 1) throw std::invalid_argument("coefficient sequence must have c_0 = 1");
    }
  }

  /// Uses c_0 as the ring identity, so only sequences that already start with 1 make sense.
  R one() const { return values_[0]; }
  R zero() const { return values_[0] - values_[0]; }

  R at(long i) const {
    if (i < 0) return zero();
    auto u = static_cast<std::size_t>(i);
    if (u < values_.size()) return values_[u];
    if (terminating_) return zero();
    throw std::out_of_range("coefficient index " + std::to_string(i) + " beyond known prefix");
  }

  std::size_t known() const { return values_.size(); }
  bool terminating() const { return terminating_; }
  const std::vector<R>& values() const { return values_; }

  /// c^v with c^v_i = (-1)^i c_i.
  CoeffSeq dual() const {
    std::vector<R> v = values_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = zero() - v[i];
    return CoeffSeq(std::move(v), terminating_);
  }

private:
  std::vector<R> values_;
  bool terminating_;
};

template <class R>
CoeffSeq<R> make_coeff_seq(std::vector<R> values, bool terminating = true) {
  return CoeffSeq<R>(std::move(values), terminating);
}

/// Delta_lambda(c) = det(c_{lambda_i - i + j})_{1 <= i,j <= length(lambda)}.
template <class R>
R delta_det(const Partition& lambda, const CoeffSeq<R>& c) {
  const std::size_t r = lambda.length();
  if (r == 0) return c.one();
  Matrix<R> m(r, r, c.zero());
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      m(i - 1, j - 1) = c.at(static_cast<long>(lambda.part(i)) - static_cast<long>(i) + static_cast<long>(j));
  if constexpr (std::is_same_v<R, Rational> || std::is_same_v<R, Integer>) {
    return determinant(std::move(m));
  } else {
    return determinant_division_free(m, c.zero(), c.one());
  }
}

/// Coefficients of the inverse power series of c, as a sequence with the same prefix length.
inline CoeffSeq<Rational> inverse_sequence(const CoeffSeq<Rational>& c, std::size_t order) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < order; ++i) v.push_back(c.at(static_cast<long>(i)));
  TruncSeries inv = TruncSeries(order, v).inverse();
  return CoeffSeq<Rational>(inv.coefficients(), false);
}

/// Bernoulli numbers in the all-positive convention B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...
/// (B_n here is |B_{2n}| in the modern indexing), from the explicit double sum
///   B_n = (-1)^{n-1} sum_{k=1}^{2n} 1/(k+1) sum_{r=1}^{k} (-1)^r C(k,r) r^{2n}.
inline Rational bernoulli(unsigned n) {
  if (n == 0) throw std::invalid_argument("bernoulli index starts at 1");
  Rational total = 0;
  for (unsigned k = 1; k <= 2 * n; ++k) {
    Integer inner = 0;
    for (unsigned r = 1; r <= k; ++r) {
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), r, 2 * n);
      Integer term = binomial(k, r) * pw;
      if (r % 2) inner -= term; else inner += term;
    }
    total += Rational(inner) / static_cast<long>(k + 1);
  }
  total.canonicalize();
  return (n % 2 == 1) ? total : Rational(-total);
}

/// Coefficients b_0..b_K of t / (1 - e^{-t}), obtained by inverting (1 - e^{-t}) / t.
inline CoeffSeq<Rational> b_sequence(std::size_t K) {
  const std::size_t order = K + 1;
  std::vector<Rational> denom(order);
  // (1 - e^{-t}) / t = sum_i (-1)^i t^i / (i+1)!
  for (std::size_t i = 0; i < order; ++i) {
    Rational v = make_rational(Integer(1), factorial(static_cast<unsigned>(i + 1)));
    denom[i] = (i % 2) ? Rational(-v) : v;
  }
  TruncSeries b = TruncSeries(order, denom).inverse();
  return CoeffSeq<Rational>(b.coefficients(), false);
}

/// B_j recovered from the series: B_j = (-1)^{j-1} (2j)! b_{2j}.
inline Rational bernoulli_from_series(unsigned n) {
  auto b = b_sequence(2 * n);
  Rational v = b.at(2 * n) * Rational(factorial(2 * n));
  return (n % 2 == 1) ? v : Rational(-v);
}

/// Variables c1..cm.
inline std::vector<std::string> chern_variables(unsigned m) { return indexed_variables("c", m, 1); }

/// c = (1, c1, ..., cm) as polynomials in c1..cm.
inline CoeffSeq<MultiPoly> chern_variable_sequence(unsigned m) {
  auto vars = chern_variables(m);
  std::vector<MultiPoly> v{MultiPoly::constant(vars, 1)};
  for (unsigned i = 0; i < m; ++i) v.push_back(MultiPoly::variable(vars, i));
  return CoeffSeq<MultiPoly>(std::move(v), true);
}

/// Todd polynomial T_m(c1..cm) = sum_{|lambda| = m} Delta_{lambda'}(b) Delta_lambda(c).
inline MultiPoly todd_poly(unsigned m) {
  auto vars = chern_variables(m);
  if (m == 0) return MultiPoly::constant(vars, 1);
  auto b = b_sequence(m);
  auto c = chern_variable_sequence(m);
  MultiPoly total(vars);
  for (const auto& lambda : enumerate_partitions(m, m, m)) {
    Rational coeff = delta_det(conjugate(lambda), b);
    if (coeff == 0) continue;
    total += delta_det(lambda, c) * coeff;
  }
  return total;
}

/// K_i(c1..ci): the i-th power sum of the Chern roots, in elementary symmetric
/// functions via Newton's identities, divided by i!.
inline MultiPoly chern_character_poly(unsigned i) {
  if (i == 0) throw std::invalid_argument("chern character component index starts at 1");
  auto vars = chern_variables(i);
  std::vector<MultiPoly> e{MultiPoly::constant(vars, 1)};
  for (unsigned k = 0; k < i; ++k) e.push_back(MultiPoly::variable(vars, k));
  std::vector<MultiPoly> p(i + 1, MultiPoly(vars));
  for (unsigned k = 1; k <= i; ++k) {
    MultiPoly acc = e[k] * Rational(static_cast<long>(k));
    if ((k - 1) % 2) acc = -acc;
    for (unsigned j = 1; j < k; ++j) {
      MultiPoly t = e[j] * p[k - j];
      if ((j - 1) % 2) acc -= t; else acc += t;
    }
    p[k] = std::move(acc);
  }
  return p[i] * make_rational(Integer(1), factorial(i));
}

/// e_0..e_K of the values gamma (terminating: e_k = 0 for k > #gamma).
inline CoeffSeq<Rational> elementary_values(const std::vector<Rational>& gamma) {
  std::vector<Rational> e{Rational(1)};
  for (const auto& g : gamma) {
    e.push_back(Rational(0));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += g * e[k - 1];
  }
  return CoeffSeq<Rational>(std::move(e), true);
}

/// h_0..h_K of the values gamma, from prod 1/(1 - gamma_i t).
inline CoeffSeq<Rational> complete_values(const std::vector<Rational>& gamma, std::size_t K) {
  auto e = elementary_values(gamma);
  std::vector<Rational> alt;
  for (std::size_t i = 0; i <= K; ++i) {
    Rational v = e.at(static_cast<long>(i));
    alt.push_back((i % 2) ? Rational(-v) : v);
  }
  TruncSeries h = TruncSeries(K + 1, alt).inverse();
  return CoeffSeq<Rational>(h.coefficients(), false);
}

/// Bialternant det(gamma_i^{lambda_j + m - j}) / det(gamma_i^{m - j}); needs distinct gamma.
inline Rational schur_bialternant(const Partition& lambda, const std::vector<Rational>& gamma) {
  const std::size_t m = gamma.size();
  if (lambda.length() > m) throw std::invalid_argument("partition longer than the number of variables");
  auto parts = lambda.padded(m);
  QMatrix num(m, m), vdm(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      num(i, j) = rational_pow(gamma[i], parts[j] + static_cast<unsigned>(m - 1 - j));
      vdm(i, j) = rational_pow(gamma[i], static_cast<unsigned>(m - 1 - j));
    }
  Rational d = determinant(vdm);
  if (d == 0) throw std::domain_error("bialternant needs pairwise distinct points");
  return determinant(num) / d;
}

/// Jacobi-Trudi s_lambda = Delta_lambda(h).
inline Rational schur_jacobi_trudi(const Partition& lambda, const std::vector<Rational>& gamma) {
  if (lambda.length() > gamma.size()) throw std::invalid_argument("partition longer than the number of variables");
  std::size_t K = lambda.first() + lambda.length();
  return delta_det(lambda, complete_values(gamma, K));
}

/// s_lambda(gamma_1..gamma_m); bialternant at distinct points, Jacobi-Trudi otherwise.
inline Rational schur_eval(const Partition& lambda, const std::vector<Rational>& gamma) {
  if (lambda.length() > gamma.size()) throw std::invalid_argument("partition longer than the number of variables");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = i + 1; j < gamma.size(); ++j)
      if (gamma[i] == gamma[j]) return schur_jacobi_trudi(lambda, gamma);
  return schur_bialternant(lambda, gamma);
}

/// d^m_{lambda mu} = det C(lambda_i + m + 1 - i, mu_j + m + 1 - j), 1 <= i,j <= m.
inline Integer d_coeff(const Partition& lambda, const Partition& mu, unsigned m) {
  if (lambda.length() > m || mu.length() > m) throw std::invalid_argument("d_coeff: partition longer than m");
  ZMatrix a(m, m);
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = 1; j <= m; ++j)
      a(i - 1, j - 1) = binomial(static_cast<long>(lambda.part(i) + m + 1 - i),
                                 static_cast<long>(mu.part(j) + m + 1 - j));
  return determinant(std::move(a));
}

/// N(k, m) = [(m-k+1)! (m-k)! ... 2! 1!]^2.
inline Integer scaling_factor(unsigned k, unsigned m) {
  if (k > m) throw std::invalid_argument("scaling_factor requires k <= m");
  Integer prod = 1;
  for (unsigned j = 1; j <= m - k + 1; ++j) prod *= factorial(j);
  return prod * prod;
}

/// delta^{m,k}_mu = (-1)^{|mu|} sum_{mu in lambda, |lambda| = m-k} Delta_lambda(b) d^m_{lambda mu}.
inline Rational delta_coeff(unsigned m, unsigned k, const Partition& mu) {
  if (k > m) throw std::invalid_argument("delta_coeff requires k <= m");
  if (mu.size() > m - k) throw std::invalid_argument("delta_coeff requires |mu| <= m - k");
  auto b = b_sequence(m + 1);
  Rational sum = 0;
  for (const auto& lambda : enumerate_partitions(m - k, m - k, m, mu)) {
    Rational db = delta_det(lambda, b);
    if (db == 0) continue;
    sum += db * Rational(d_coeff(lambda, mu, m));
  }
  return (mu.size() % 2) ? Rational(-sum) : sum;
}

struct DeltaTable {
  unsigned m = 0, k = 0, n = 0;
  /// Sizes ascending, each size in lexicographically descending order.
  std::vector<std::pair<Partition, Rational>> entries;
};

/// All delta^{m,k}_mu with |mu| <= m - k and mu_1 <= n - m.
inline DeltaTable delta_table(unsigned m, unsigned k, unsigned n) {
  if (k > m || m > n) throw std::invalid_argument("delta_table requires k <= m <= n");
  DeltaTable t{m, k, n, {}};
  for (const auto& mu : partitions_up_to(m - k, n - m, m)) t.entries.emplace_back(mu, delta_coeff(m, k, mu));
  return t;
}

}  // namespace hilbertkit
