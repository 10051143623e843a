#pragma once

// Buchberger's algorithm over Q, normal forms, and Hilbert series / functions /
// polynomials of homogeneous ideals read off the leading-term ideal.

#include "hilbertkit/matrix.hpp"
#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/rational.hpp"
#include "hilbertkit/unipoly.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbertkit {

/// Thrown when a computation exceeds a configured basis-size or degree cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// `ranking[0]` is the largest variable. An empty ranking means x0 > x1 > ...
struct MonomialOrder {
  enum class Kind { lex, grevlex };
  Kind kind = Kind::grevlex;
  std::vector<std::size_t> ranking;

  static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }
  static MonomialOrder lex() { return {Kind::lex, {}}; }

  /// grevlex with variable `var` ranked below all others. Makes the homogenizing
  /// variable of a dehomogenized system the cheapest one to eliminate.
  static MonomialOrder grevlex_last(std::size_t nvars, std::size_t var) {
    MonomialOrder o;
    for (std::size_t i = 0; i < nvars; ++i)
      if (i != var) o.ranking.push_back(i);
    o.ranking.push_back(var);
    return o;
  }

  std::vector<std::size_t> ranking_for(std::size_t nvars) const {
    if (ranking.empty()) {
      std::vector<std::size_t> r(nvars);
      std::iota(r.begin(), r.end(), 0);
      return r;
    }
    if (ranking.size() != nvars) throw std::invalid_argument("monomial order ranks the wrong number of variables");
    std::vector<bool> seen(nvars, false);
    for (auto v : ranking) {
      if (v >= nvars || seen[v]) throw std::invalid_argument("monomial order ranking is not a permutation");
      seen[v] = true;
    }
    return ranking;
  }
};

struct GrobnerLimits {
  std::size_t max_basis = 20000;
  unsigned max_degree = 200;
};

/// Generators plus a verified homogeneity flag.
class Ideal {
public:
  explicit Ideal(std::vector<std::string> variables, std::vector<MultiPoly> generators = {})
      : vars_(std::move(variables)) {
    for (auto& g : generators) add(std::move(g));
  }

  void add(MultiPoly g) {
    if (g.variables() != vars_) throw std::invalid_argument("variable-list mismatch");
    if (g.is_zero()) return;
    homogeneous_ = homogeneous_ && is_homogeneous(g).homogeneous();
    gens_.push_back(std::move(g));
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool homogeneous() const { return homogeneous_; }

private:
  std::vector<std::string> vars_;
  std::vector<MultiPoly> gens_;
  bool homogeneous_ = true;
};

namespace detail {

constexpr std::size_t kMaxVars = 32;

/// Exponents stored by rank position: e[p] belongs to the p-th largest variable.
struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
};

inline bool divides(const Mono& a, const Mono& b, std::size_t n) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline bool coprime(const Mono& a, const Mono& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

inline Mono lcm(const Mono& a, const Mono& b, std::size_t n) {
  Mono r;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

inline Mono mul(const Mono& a, const Mono& b, std::size_t n) {
  Mono r;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 0xFFFF) throw ResourceError("exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

/// b / a, assuming a | b.
inline Mono quotient(const Mono& b, const Mono& a, std::size_t n) {
  Mono r;
  for (std::size_t i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

struct RankedOrder {
  bool lex;
  std::size_t n;

  int compare(const Mono& a, const Mono& b) const {
    if (lex) {
      for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

struct Term {
  Mono m;
  Rational c;
};
/// Terms in strictly decreasing order.
using Poly = std::vector<Term>;

/// f - c * m * g
inline Poly sub_mul(const Poly& f, std::size_t f_from, const Rational& c, const Mono& m, const Poly& g,
                    const RankedOrder& ord) {
  Poly out;
  out.reserve(f.size() - f_from + g.size());
  std::size_t i = f_from, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Mono gm = mul(g[j].m, m, ord.n);
    int cmp = i < f.size() ? ord.compare(f[i].m, gm) : -1;
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[j].c});
      ++j;
    } else {
      Rational v = f[i].c - c * g[j].c;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(Poly& f) {
  if (f.empty() || f[0].c == 1) return;
  Rational inv = 1 / f[0].c;
  for (auto& t : f) t.c *= inv;
}

/// Reduces f by the monic polynomials `basis`. With `full` every term is reduced,
/// otherwise only until the leading term is irreducible.
inline Poly reduce(Poly f, const std::vector<const Poly*>& basis, bool full, const RankedOrder& ord) {
  Poly done;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lead = f[start];
    const Poly* hit = nullptr;
    for (const Poly* g : basis)
      if (divides((*g)[0].m, lead.m, ord.n)) {
        hit = g;
        break;
      }
    if (hit) {
      Mono q = quotient(lead.m, (*hit)[0].m, ord.n);
      Rational c = lead.c;
      f = sub_mul(f, start, c, q, *hit, ord);
      start = 0;
    } else if (full) {
      done.push_back(f[start]);
      ++start;
    } else {
      if (start) f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(start));
      return f;
    }
  }
  return done;
}

inline Poly spoly(const Poly& f, const Poly& g, const Mono& l, const RankedOrder& ord) {
  Poly a = sub_mul({}, 0, Rational(-1), quotient(l, f[0].m, ord.n), f, ord);
  return sub_mul(a, 0, Rational(1), quotient(l, g[0].m, ord.n), g, ord);
}

struct Ranking {
  std::vector<std::size_t> rank;  // rank position -> variable index
  std::vector<std::size_t> pos;   // variable index -> rank position
  explicit Ranking(std::vector<std::size_t> r) : rank(std::move(r)), pos(rank.size()) {
    for (std::size_t p = 0; p < rank.size(); ++p) pos[rank[p]] = p;
  }
};

inline Mono to_mono(const Exponents& e, const Ranking& rk) {
  Mono m;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] > 0xFFFF) throw ResourceError("exponent overflow");
    m.e[rk.pos[v]] = static_cast<std::uint16_t>(e[v]);
    m.deg += e[v];
  }
  return m;
}

inline Exponents to_exponents(const Mono& m, const Ranking& rk) {
  Exponents e(rk.rank.size(), 0);
  for (std::size_t p = 0; p < rk.rank.size(); ++p) e[rk.rank[p]] = m.e[p];
  return e;
}

inline Poly to_poly(const MultiPoly& f, const Ranking& rk, const RankedOrder& ord) {
  Poly p;
  for (const auto& [e, c] : f.terms()) p.push_back({to_mono(e, rk), c});
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  return p;
}

inline MultiPoly to_multipoly(const Poly& p, const std::vector<std::string>& vars, const Ranking& rk) {
  MultiPoly f(vars);
  for (const auto& t : p) f.add_term(to_exponents(t.m, rk), t.c);
  return f;
}

}  // namespace detail

/// Reduced, monic Groebner basis, sorted by increasing leading monomial.
class GrobnerBasis {
public:
  GrobnerBasis(std::vector<std::string> vars, MonomialOrder order, std::vector<detail::Poly> polys)
      : vars_(std::move(vars)), order_(std::move(order)), rk_(order_.ranking_for(vars_.size())),
        ord_{order_.kind == MonomialOrder::Kind::lex, vars_.size()}, polys_(std::move(polys)) {
    std::sort(polys_.begin(), polys_.end(),
              [&](const detail::Poly& a, const detail::Poly& b) { return ord_.compare(a[0].m, b[0].m) < 0; });
    for (const auto& p : polys_) elements_.push_back(detail::to_multipoly(p, vars_, rk_));
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  std::size_t size() const { return polys_.size(); }
  bool is_unit_ideal() const { return polys_.size() == 1 && polys_[0][0].m.deg == 0; }

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> out;
    for (const auto& p : polys_) out.push_back(detail::to_exponents(p[0].m, rk_));
    return out;
  }

  MultiPoly normal_form(const MultiPoly& f) const {
    if (f.variables() != vars_) throw std::invalid_argument("variable-list mismatch");
    std::vector<const detail::Poly*> basis;
    for (const auto& p : polys_) basis.push_back(&p);
    return detail::to_multipoly(detail::reduce(detail::to_poly(f, rk_, ord_), basis, true, ord_), vars_, rk_);
  }

private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
  detail::Ranking rk_;
  detail::RankedOrder ord_;
  std::vector<detail::Poly> polys_;
  std::vector<MultiPoly> elements_;
};

inline Exponents leading_monomial(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  detail::Ranking rk(order.ranking_for(f.nvars()));
  detail::RankedOrder ord{order.kind == MonomialOrder::Kind::lex, f.nvars()};
  return detail::to_exponents(detail::to_poly(f, rk, ord)[0].m, rk);
}

/// Buchberger with the Gebauer-Moeller pair criteria and the normal selection strategy.
inline GrobnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                               const GrobnerLimits& limits = {}) {
  using namespace detail;
  const std::size_t n = ideal.nvars();
  if (n > kMaxVars) throw std::invalid_argument("at most 32 variables are supported");
  Ranking rk(order.ranking_for(n));
  RankedOrder ord{order.kind == MonomialOrder::Kind::lex, n};

  struct Pair {
    std::size_t i, j;
    Mono lcm;
  };
  std::vector<Poly> store;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_basis = [&] {
    std::vector<const Poly*> b;
    for (std::size_t i = 0; i < store.size(); ++i)
      if (active[i]) b.push_back(&store[i]);
    return b;
  };

  auto insert = [&](Poly h) {
    make_monic(h);
    if (h[0].m.deg > limits.max_degree)
      throw ResourceError("Groebner basis element of degree " + std::to_string(h[0].m.deg) + " exceeds max_degree");
    if (store.size() >= limits.max_basis) throw ResourceError("Groebner basis exceeds max_basis polynomials");
    const Mono& lh = h[0].m;
    const std::size_t hi = store.size();

    // New pairs: keep (g, h) unless another new pair's lcm properly divides it, or its
    // lcm repeats one already kept; then drop pairs with coprime leading monomials.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < store.size(); ++g)
      if (active[g]) fresh.push_back({g, hi, lcm(store[g][0].m, lh, n)});
    std::vector<Pair> kept;
    std::vector<bool> coprimes;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool cp = coprime(store[fresh[a].i][0].m, lh, n);
      bool keep = cp;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (divides(fresh[b].lcm, fresh[a].lcm, n)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (divides(kept[b].lcm, fresh[a].lcm, n)) keep = false;
      }
      if (keep) {
        kept.push_back(fresh[a]);
        coprimes.push_back(cp);
      }
    }
    // Old pairs whose lcm is divisible by lm(h) with both new lcms different are redundant.
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      bool drop = divides(lh, p.lcm, n) && !(lcm(store[p.i][0].m, lh, n) == p.lcm) &&
                  !(lcm(store[p.j][0].m, lh, n) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (std::size_t a = 0; a < kept.size(); ++a)
      if (!coprimes[a]) next.push_back(kept[a]);
    pairs = std::move(next);

    for (std::size_t g = 0; g < store.size(); ++g)
      if (active[g] && divides(lh, store[g][0].m, n)) active[g] = false;
    store.push_back(std::move(h));
    active.push_back(true);
  };

  for (const auto& g : ideal.generators()) {
    Poly h = reduce(to_poly(g, rk, ord), active_basis(), false, ord);
    if (!h.empty()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a)
      if (ord.compare(pairs[a].lcm, pairs[best].lcm) < 0) best = a;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Poly h = reduce(spoly(store[p.i], store[p.j], p.lcm, ord), active_basis(), false, ord);
    if (!h.empty()) insert(std::move(h));
  }

  // Interreduce the tails; leading monomials of the active set are already minimal.
  std::vector<Poly> result;
  auto basis = active_basis();
  for (const Poly* g : basis) {
    std::vector<const Poly*> others;
    for (const Poly* o : basis)
      if (o != g) others.push_back(o);
    Poly tail(g->begin() + 1, g->end());
    Poly r{(*g)[0]};
    for (auto& t : reduce(std::move(tail), others, true, ord)) r.push_back(std::move(t));
    result.push_back(std::move(r));
  }
  return GrobnerBasis(ideal.variables(), order, std::move(result));
}

inline bool in_ideal(const MultiPoly& f, const GrobnerBasis& g) { return g.normal_form(f).is_zero(); }

inline bool in_ideal(const MultiPoly& f, const Ideal& ideal) {
  return in_ideal(f, buchberger(ideal));
}

/// Keeps only generators not divisible by another one (first copy of duplicates).
inline std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  auto div = [](const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    return total_degree(a) < total_degree(b);
  });
  std::vector<Exponents> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) redundant = redundant || div(o, g);
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Numerator Q(t) of HS_{S/L}(t) = Q(t)/(1-t)^nvars for the monomial ideal L. Pivots on
/// a variable shared by the most generators: HS(L) = HS(L + x) + t HS(L : x).
inline UniPoly hilbert_series_monomial(std::vector<Exponents> gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw std::invalid_argument("monomial has the wrong number of variables");
  gens = minimalize(std::move(gens));
  if (gens.empty()) return UniPoly::constant(1);

  std::vector<std::size_t> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v]) ++count[v];
  std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());

  if (count[pivot] <= 1) {
    UniPoly q = UniPoly::constant(1);
    for (const auto& g : gens) q *= UniPoly::constant(1) - UniPoly::monomial(total_degree(g), 1);
    return q;
  }

  std::vector<Exponents> plus, colon;
  Exponents x(nvars, 0);
  x[pivot] = 1;
  plus.push_back(x);
  for (const auto& g : gens) {
    if (!g[pivot]) plus.push_back(g);
    Exponents c = g;
    if (c[pivot]) --c[pivot];
    colon.push_back(std::move(c));
  }
  return hilbert_series_monomial(std::move(plus), nvars) +
         UniPoly::monomial(1, 1) * hilbert_series_monomial(std::move(colon), nvars);
}

/// Hilbert data of S/I. For non-radical I this is the quotient by I itself, not by its radical.
struct HilbertData {
  std::size_t nvars = 0;
  UniPoly series_numerator;  // over (1-t)^nvars
  UniPoly reduced_numerator;  // over (1-t)^dimension
  unsigned dimension = 0;     // Krull dimension of S/I
  UniPoly hilbert_polynomial;
  unsigned index_of_regularity = 0;

  /// dim_Q (S/I)_k
  Integer hilbert_function(long k) const {
    if (k < 0) return 0;
    Rational v = 0;
    const auto& q = reduced_numerator.coefficients();
    for (std::size_t j = 0; j < q.size() && static_cast<long>(j) <= k; ++j) {
      long a = k - static_cast<long>(j);
      v += q[j] * (dimension == 0 ? Rational(a == 0 ? 1 : 0) : Rational(binomial(a + dimension - 1, dimension - 1)));
    }
    return v.get_num();
  }

  /// Degree of the projective zero set; -1 when it is empty.
  int projective_dimension() const { return hilbert_polynomial.degree(); }
  /// m! times the leading coefficient.
  Integer geometric_degree() const {
    if (hilbert_polynomial.is_zero()) return 0;
    Rational d = hilbert_polynomial.leading_coefficient() * Rational(factorial(static_cast<unsigned>(hilbert_polynomial.degree())));
    return d.get_num();
  }
  /// (-1)^m (p(0) - 1)
  Rational arithmetic_genus() const {
    Rational g = hilbert_polynomial(0) - 1;
    return hilbert_polynomial.degree() % 2 ? Rational(-g) : g;
  }
};

inline HilbertData hilbert_data_from_leading(const std::vector<Exponents>& leading, std::size_t nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.series_numerator = hilbert_series_monomial(leading, nvars);
  UniPoly q = h.series_numerator;
  unsigned d = static_cast<unsigned>(nvars);
  while (d > 0 && !q.is_zero() && q(1) == 0) {
    q = q.divide_by_one_minus_t();
    --d;
  }
  h.reduced_numerator = q;
  h.dimension = q.is_zero() ? 0 : d;
  if (h.dimension > 0)
    for (std::size_t j = 0; j < q.coefficients().size(); ++j)
      h.hilbert_polynomial += q.coefficients()[j] * binom_poly(static_cast<long>(h.dimension) - 1 - static_cast<long>(j), h.dimension - 1);

  long k = std::max(0L, static_cast<long>(q.degree()) - static_cast<long>(h.dimension) + 1);
  while (k > 0 && Rational(h.hilbert_function(k - 1)) == h.hilbert_polynomial(k - 1)) --k;
  h.index_of_regularity = static_cast<unsigned>(k);
  return h;
}

inline HilbertData hilbert_data(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                                const GrobnerLimits& limits = {}) {
  if (!ideal.homogeneous()) throw std::invalid_argument("Hilbert data needs a homogeneous ideal");
  return hilbert_data_from_leading(buchberger(ideal, order, limits).leading_monomials(), ideal.nvars());
}

namespace detail {

inline void monomials_of_degree(std::size_t nvars, unsigned k, std::vector<Exponents>& out) {
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == nvars) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  if (nvars == 0) {
    if (k == 0) out.push_back(e);
    return;
  }
  rec(rec, 0, k);
}

}  // namespace detail

inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned k) {
  std::vector<Exponents> out;
  detail::monomials_of_degree(nvars, k, out);
  return out;
}

/// dim (S/I)_k from the rank of the span of all monomial multiples of generators in
/// degree k. Does not touch the Groebner code.
inline Integer hilbert_function_direct(const Ideal& ideal, unsigned k) {
  if (!ideal.homogeneous()) throw std::invalid_argument("Hilbert function needs a homogeneous ideal");
  const std::size_t n = ideal.nvars();
  auto monos = monomials_of_degree(n, k);
  std::map<Exponents, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column[monos[i]] = i;

  // Sparse elimination: rows keyed by pivot column, each row normalized to pivot 1.
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
  for (const auto& g : ideal.generators()) {
    int dg = g.total_degree();
    if (dg > static_cast<int>(k)) continue;
    for (const auto& m : monomials_of_degree(n, k - static_cast<unsigned>(dg))) {
      std::map<std::size_t, Rational> row;
      for (const auto& [e, c] : g.terms()) {
        Exponents s = e;
        for (std::size_t v = 0; v < n; ++v) s[v] += m[v];
        row[column.at(s)] += c;
      }
      while (!row.empty()) {
        auto lead = row.begin();
        if (lead->second == 0) {
          row.erase(lead);
          continue;
        }
        auto p = pivots.find(lead->first);
        if (p == pivots.end()) {
          Rational inv = 1 / lead->second;
          for (auto& [col, v] : row) v *= inv;
          pivots.emplace(lead->first, std::move(row));
          break;
        }
        Rational f = lead->second;
        for (const auto& [col, v] : p->second) {
          Rational& slot = row[col];
          slot -= f * v;
          if (slot == 0) row.erase(col);
        }
      }
    }
  }
  return Integer(static_cast<unsigned long>(monos.size() - pivots.size()));
}

/// Number of solutions counted with multiplicity, i.e. dim_Q S/I; nullopt when infinite.
inline std::optional<Integer> count_zero_dim(const Ideal& ideal, const GrobnerLimits& limits = {}) {
  GrobnerBasis g = buchberger(ideal, MonomialOrder::grevlex(), limits);
  const std::size_t n = ideal.nvars();
  auto lead = g.leading_monomials();
  if (g.is_unit_ideal()) return Integer(0);
  std::vector<unsigned> bound(n, 0);
  for (const auto& e : lead) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (e[v]) {
        ++support;
        var = v;
      }
    if (support == 1 && (bound[var] == 0 || e[var] < bound[var])) bound[var] = e[var];
  }
  for (auto b : bound)
    if (b == 0) return std::nullopt;

  Integer count = 0;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      for (const auto& l : lead) {
        bool div = true;
        for (std::size_t i = 0; i < n && div; ++i) div = l[i] <= e[i];
        if (div) return;
      }
      ++count;
      return;
    }
    for (unsigned a = 0; a < bound[v]; ++a) {
      e[v] = a;
      self(self, v + 1);
    }
    e[v] = 0;
  };
  rec(rec, 0);
  return count;
}

struct MembershipReport {
  bool member = false;
  UniPoly without_g;
  UniPoly with_g;
};

/// Decides g in I by comparing Hilbert polynomials of I and I + (g) after adjoining a
/// fresh variable to both.
inline MembershipReport membership_via_hilbert(const Ideal& ideal, const MultiPoly& g,
                                               const GrobnerLimits& limits = {}) {
  if (!ideal.homogeneous()) throw std::invalid_argument("membership via Hilbert polynomials needs a homogeneous ideal");
  auto h = is_homogeneous(g);
  if (g.is_constant() || !h.homogeneous()) throw std::invalid_argument("g must be homogeneous and non-constant");
  std::vector<std::string> vars = ideal.variables();
  std::string fresh = "y";
  while (std::find(vars.begin(), vars.end(), fresh) != vars.end()) fresh += "_";
  vars.push_back(fresh);

  Ideal base(vars);
  for (const auto& f : ideal.generators()) base.add(with_variables(f, vars));
  Ideal extended = base;
  extended.add(with_variables(g, vars));
  MembershipReport r;
  r.without_g = hilbert_data(base, MonomialOrder::grevlex(), limits).hilbert_polynomial;
  r.with_g = hilbert_data(extended, MonomialOrder::grevlex(), limits).hilbert_polynomial;
  r.member = r.without_g == r.with_g;
  return r;
}

}  // namespace hilbertkit
