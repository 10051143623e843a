#pragma once

// Chern and Todd classes of smooth complete intersections in P^n, computed in
// Q[h]/(h^{m+1}) where h is the hyperplane class, plus the three routes to the
// Hilbert polynomial: Hirzebruch-Riemann-Roch, projective characters, and the
// Hilbert series of a regular sequence.

#include "hilbertkit/grobner.hpp"
#include "hilbertkit/partition.hpp"
#include "hilbertkit/rational.hpp"
#include "hilbertkit/series.hpp"
#include "hilbertkit/symfun.hpp"
#include "hilbertkit/unipoly.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbertkit {

/// V = Z(g_1, ..., g_r) in P^n with deg g_i = d_i, assumed smooth of dimension m = n - r.
class CompleteIntersection {
public:
  CompleteIntersection(unsigned n, std::vector<unsigned> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (degrees_.size() > n_) throw std::invalid_argument("more equations than the ambient dimension");
    for (auto d : degrees_)
      if (d == 0) throw std::invalid_argument("equation degrees must be positive");
  }

  unsigned n() const { return n_; }
  unsigned m() const { return n_ - static_cast<unsigned>(degrees_.size()); }
  unsigned r() const { return static_cast<unsigned>(degrees_.size()); }
  const std::vector<unsigned>& degrees() const { return degrees_; }

  Integer degree() const {
    Integer p = 1;
    for (auto d : degrees_) p *= d;
    return p;
  }

  std::string to_string() const {
    std::string s = "n=" + std::to_string(n_) + " degrees=";
    for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
    return s;
  }

private:
  unsigned n_;
  std::vector<unsigned> degrees_;
};

/// Coefficient of h^m times deg V: capping against [V] and taking degree.
inline Rational deg_cap(const CompleteIntersection& ci, const TruncSeries& x) {
  if (x.order() != ci.m() + 1) throw std::invalid_argument("class is not truncated at h^{m+1}");
  return x.coefficient(ci.m()) * Rational(ci.degree());
}

/// c(TV) = (1+h)^{n+1} / prod (1 + d_i h), from the Euler and normal sequences.
inline TruncSeries chern_tangent(const CompleteIntersection& ci) {
  const std::size_t K = ci.m() + 1;
  TruncSeries num = TruncSeries(K, {1, 1}).pow(ci.n() + 1);
  TruncSeries den = TruncSeries::one(K);
  for (auto d : ci.degrees()) den = den * TruncSeries(K, {Rational(1), Rational(d)});
  return num * den.inverse();
}

/// c(N~V) = prod (1 + (d_i - 1) h): the differentials of the equations give the normal
/// bundle of the affine cone as a sum of O_V(d_i - 1).
inline TruncSeries chern_cone_normal(const CompleteIntersection& ci) {
  const std::size_t K = ci.m() + 1;
  TruncSeries c = TruncSeries::one(K);
  for (auto d : ci.degrees()) c = c * TruncSeries(K, {Rational(1), Rational(d - 1)});
  return c;
}

inline TruncSeries chern_cone_tangent(const CompleteIntersection& ci) { return chern_cone_normal(ci).inverse(); }

/// c(TV) again, from TV + O_V = L_V (x) T~V: sum_j c_j(T~V) (1+h)^{m+1-j}.
inline TruncSeries chern_tangent_via_twist(const CompleteIntersection& ci) {
  const std::size_t K = ci.m() + 1;
  TruncSeries ct = chern_cone_tangent(ci);
  TruncSeries sum(K);
  for (unsigned j = 0; j <= ci.m(); ++j)
    sum = sum + TruncSeries(K, {1, 1}).pow(ci.m() + 1 - j) * TruncSeries::monomial(K, j, ct.coefficient(j));
  return sum;
}

/// Coefficients of a class as a coefficient sequence c_0 = 1, c_1, ..., c_m.
inline CoeffSeq<Rational> class_sequence(const TruncSeries& c) { return make_coeff_seq(c.coefficients(), true); }

/// td(V) = 1 + sum T_i(c_1, ..., c_i). T_i is weighted homogeneous, so the h^i
/// coefficient is T_i evaluated on the numeric Chern coefficients.
inline TruncSeries todd_class(const CompleteIntersection& ci) {
  const std::size_t K = ci.m() + 1;
  TruncSeries c = chern_tangent(ci);
  std::vector<Rational> td(K, Rational(0));
  td[0] = 1;
  for (unsigned i = 1; i < K; ++i) {
    std::vector<Rational> point;
    for (unsigned j = 1; j <= i; ++j) point.push_back(c.coefficient(j));
    td[i] = evaluate(todd_poly(i), point);
  }
  return TruncSeries(K, td);
}

/// chi(O_V(d)) = deg((e^{dh} td(V))_m cap [V]).
inline Integer euler_char_twist(const CompleteIntersection& ci, long d) {
  const std::size_t K = ci.m() + 1;
  Rational v = deg_cap(ci, TruncSeries::exp(K, Rational(d)) * todd_class(ci));
  if (!is_integer(v)) throw std::logic_error("non-integral Euler characteristic " + to_string(v));
  return v.get_num();
}

/// p_k = deg(h^k T_{m-k}(c) cap [V]) / k!
inline UniPoly hilbert_poly_hrr(const CompleteIntersection& ci) {
  const unsigned m = ci.m();
  TruncSeries td = todd_class(ci);
  std::vector<Rational> p(m + 1);
  for (unsigned k = 0; k <= m; ++k)
    p[k] = td.coefficient(m - k) * Rational(ci.degree()) / Rational(factorial(k));
  return UniPoly(std::move(p));
}

/// deg P_lambda: coefficient of h^{|lambda|} in Delta_lambda(c(N~V)) times deg V, and 0
/// when lambda_1 > n - m.
inline Integer projective_character(const CompleteIntersection& ci, const Partition& lambda) {
  if (lambda.size() > ci.m()) throw std::invalid_argument("character needs |lambda| <= m");
  if (lambda.first() > ci.n() - ci.m()) return 0;
  Rational v = delta_det(lambda, class_sequence(chern_cone_normal(ci))) * Rational(ci.degree());
  if (!is_integer(v) || v < 0) throw std::logic_error("projective character is not a nonnegative integer");
  return v.get_num();
}

/// All characters deg P_mu with |mu| <= m and mu_1 <= n - m.
inline std::map<Partition, Integer> projective_characters(const CompleteIntersection& ci) {
  std::map<Partition, Integer> out;
  for (const auto& mu : partitions_up_to(ci.m(), ci.n() - ci.m(), ci.m())) out[mu] = projective_character(ci, mu);
  return out;
}

/// p_k = (1/k!) sum_mu delta^{m,k}_mu deg P_mu over |mu| <= m - k, mu_1 <= n - m. Characters
/// missing from the table count as zero.
inline Rational hilbert_coefficient_from_characters(unsigned m, unsigned k, unsigned n,
                                                    const std::map<Partition, Integer>& characters) {
  Rational sum = 0;
  for (const auto& [mu, delta] : delta_table(m, k, n).entries) {
    auto it = characters.find(mu);
    if (it != characters.end()) sum += delta * Rational(it->second);
  }
  return sum / Rational(factorial(k));
}

inline UniPoly hilbert_poly_characters(const CompleteIntersection& ci) {
  const unsigned m = ci.m();
  auto chars = projective_characters(ci);
  std::vector<Rational> p(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    p[k] = hilbert_coefficient_from_characters(m, k, ci.n(), chars);
    if (!is_integer(p[k] * Rational(scaling_factor(k, m) * factorial(k))))
      throw std::logic_error("scaled Hilbert coefficient is not integral");
  }
  return UniPoly(std::move(p));
}

/// Topological Euler characteristic deg(c_m(TV) cap [V]).
inline Integer euler_top(const CompleteIntersection& ci) {
  const std::size_t K = ci.m() + 1;
  Rational v = deg_cap(ci, TruncSeries::monomial(K, ci.m(), chern_tangent(ci).coefficient(ci.m())));
  return v.get_num();
}

/// Hilbert polynomial from HS = prod (1 - t^{d_i}) / (1-t)^{n+1} = Q(t)/(1-t)^{m+1} with
/// Q = prod (1 + t + ... + t^{d_i - 1}).
inline UniPoly ci_hilbert_series_oracle(const CompleteIntersection& ci) {
  UniPoly q = UniPoly::constant(1);
  for (auto d : ci.degrees()) q *= UniPoly(std::vector<Rational>(d, Rational(1)));
  const unsigned m = ci.m();
  UniPoly p;
  for (std::size_t j = 0; j < q.coefficients().size(); ++j)
    p += q.coefficients()[j] * binom_poly(static_cast<long>(m) - static_cast<long>(j), m);
  return p;
}

/// Dense forms of the given degrees in x0..xn with coefficients drawn from [-9, 9]. For
/// almost every seed they form a regular sequence.
inline Ideal random_complete_intersection_ideal(const CompleteIntersection& ci, std::uint64_t seed) {
  auto vars = indexed_variables("x", ci.n() + 1);
  std::mt19937_64 rng(seed);
  Ideal I(vars);
  for (auto d : ci.degrees()) {
    MultiPoly f(vars);
    for (const auto& e : monomials_of_degree(vars.size(), d))
      f += MultiPoly::monomial(vars, e, Rational(static_cast<long>(rng() % 19) - 9));
    I.add(f);
  }
  return I;
}

/// Hilbert polynomial of random_complete_intersection_ideal through a Groebner basis.
inline UniPoly hilbert_poly_grobner(const CompleteIntersection& ci, std::uint64_t seed,
                                    const GrobnerLimits& limits = {}) {
  return hilbert_data(random_complete_intersection_ideal(ci, seed), MonomialOrder::grevlex(), limits).hilbert_polynomial;
}

}  // namespace hilbertkit
