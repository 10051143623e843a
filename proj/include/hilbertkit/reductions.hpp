#pragma once

// Counting and membership problems encoded as Hilbert-polynomial questions: CNF formulas
// to zero-dimensional ideals, ideal membership through a fresh variable, one-row graded
// matrices, and exact interpolation.

#include "hilbertkit/grobner.hpp"
#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/rational.hpp"
#include "hilbertkit/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbertkit {

/// CNF over variables 1..num_vars; literal v > 0 is x_v, -v is its negation. Clauses are
/// normalized on construction: repeated literals collapse and tautologies are dropped.
class CnfFormula {
public:
  CnfFormula(unsigned num_vars, std::vector<std::vector<int>> clauses) : num_vars_(num_vars) {
    for (auto& c : clauses) {
      for (int lit : c)
        if (lit == 0 || static_cast<unsigned>(std::abs(lit)) > num_vars_)
          throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      bool tautology = false;
      for (int lit : c) tautology = tautology || std::binary_search(c.begin(), c.end(), -lit);
      if (!tautology) clauses_.push_back(std::move(c));
    }
  }

  unsigned num_vars() const { return num_vars_; }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }

  bool satisfied_by(std::uint64_t assignment) const {
    for (const auto& c : clauses_) {
      bool sat = false;
      for (int lit : c) {
        bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
        sat = sat || (lit > 0 ? value : !value);
      }
      if (!sat) return false;
    }
    return true;
  }

private:
  unsigned num_vars_;
  std::vector<std::vector<int>> clauses_;
};

/// DIMACS: optional `c` comment lines, a `p cnf V C` header, then C zero-terminated clauses.
inline CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  std::optional<std::pair<long, long>> header;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long v = -1, c = -1;
      if (header || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
        throw ParseError("malformed DIMACS header: " + line);
      header = std::make_pair(v, c);
      continue;
    }
    if (!header) throw ParseError("clause before the DIMACS header");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::labs(lit) > header->first) throw ParseError("literal " + std::to_string(lit) + " out of range");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) throw ParseError("unexpected token in clause line: " + line);
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!current.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<long>(clauses.size()) != header->second)
    throw ParseError("header announces " + std::to_string(header->second) + " clauses, found " +
                     std::to_string(clauses.size()));
  return CnfFormula(static_cast<unsigned>(header->first), std::move(clauses));
}

inline CnfFormula parse_dimacs_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string format_dimacs(const CnfFormula& phi) {
  std::string out = "p cnf " + std::to_string(phi.num_vars()) + " " + std::to_string(phi.clauses().size()) + "\n";
  for (const auto& c : phi.clauses()) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

/// Random k-CNF with distinct variables per clause and random signs.
inline CnfFormula random_cnf(unsigned num_vars, unsigned num_clauses, unsigned width, std::uint64_t seed) {
  if (width > num_vars) throw std::invalid_argument("clause width exceeds the number of variables");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> clauses;
  for (unsigned c = 0; c < num_clauses; ++c) {
    std::vector<int> vars;
    while (vars.size() < width) {
      int v = static_cast<int>(rng() % num_vars) + 1;
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    for (auto& v : vars)
      if (rng() % 2) v = -v;
    clauses.push_back(std::move(vars));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

inline std::uint64_t count_sat_bruteforce(const CnfFormula& phi) {
  if (phi.num_vars() > 24) throw ResourceError("brute-force model counting is limited to 24 variables");
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.num_vars()); ++a) count += phi.satisfied_by(a);
  return count;
}

/// Ideal in x0..xn generated by x_i^2 - x_i x0 and, per clause, the product of x0 - x_i over
/// positive literals and x_i over negative ones. Its projective zeros are the points
/// (1, a_1, ..., a_n) for satisfying 0/1 assignments a.
inline Ideal sat_to_ideal(const CnfFormula& phi) {
  const unsigned n = phi.num_vars();
  auto vars = indexed_variables("x", n + 1);
  Ideal I(vars);
  MultiPoly x0 = MultiPoly::variable(vars, 0);
  for (unsigned i = 1; i <= n; ++i) {
    MultiPoly xi = MultiPoly::variable(vars, i);
    I.add(xi * xi - xi * x0);
  }
  for (const auto& c : phi.clauses()) {
    MultiPoly f = MultiPoly::constant(vars, 1);
    for (int lit : c) {
      MultiPoly xi = MultiPoly::variable(vars, static_cast<std::size_t>(std::abs(lit)));
      f *= lit > 0 ? x0 - xi : xi;
    }
    I.add(f);
  }
  return I;
}

/// grevlex with x0 ranked last: the natural order for ideals obtained by homogenizing
/// with x0.
inline MonomialOrder homogenizing_order(std::size_t nvars) { return MonomialOrder::grevlex_last(nvars, 0); }

/// Sets `var` to 1 in every generator and drops it from the variable list.
inline Ideal dehomogenize_ideal(const Ideal& I, std::size_t var) {
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(dehomogenize(g, var));
  auto vars = I.variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(var));
  return Ideal(vars, gens);
}

/// Model count three ways: brute force, constant Hilbert polynomial of the projective
/// ideal, and the zero-dimensional count of the affine chart x0 = 1.
struct SatReport {
  std::uint64_t count_bruteforce = 0;
  UniPoly hilbert_polynomial;
  std::optional<Integer> zero_dim_count;
  bool agree = false;
};

inline SatReport sat_report(const CnfFormula& phi, const GrobnerLimits& limits = {}) {
  SatReport r;
  r.count_bruteforce = count_sat_bruteforce(phi);
  Ideal I = sat_to_ideal(phi);
  r.hilbert_polynomial = hilbert_data(I, homogenizing_order(I.nvars()), limits).hilbert_polynomial;
  r.zero_dim_count = count_zero_dim(dehomogenize_ideal(I, 0), limits);
  Rational expected(static_cast<unsigned long>(r.count_bruteforce));
  r.agree = r.hilbert_polynomial.degree() <= 0 && r.hilbert_polynomial(0) == expected && r.zero_dim_count &&
            Rational(*r.zero_dim_count) == expected;
  return r;
}

/// g in I decided by comparing Hilbert polynomials of I and I + (g) with a fresh variable.
inline bool him_decide(const Ideal& I, const MultiPoly& g, const GrobnerLimits& limits = {}) {
  return membership_via_hilbert(I, g, limits).member;
}

/// Matrix of homogeneous polynomials p_ij with deg p_ij = d_i - e_j whenever p_ij != 0.
class GradedMatrix {
public:
  GradedMatrix(std::vector<std::string> variables, std::vector<std::vector<MultiPoly>> entries,
               std::vector<long> row_degrees, std::vector<long> col_degrees)
      : vars_(std::move(variables)), entries_(std::move(entries)), rows_(std::move(row_degrees)),
        cols_(std::move(col_degrees)) {
    if (entries_.size() != rows_.size()) throw std::invalid_argument("row degree count mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].size() != cols_.size()) throw std::invalid_argument("column degree count mismatch");
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        const MultiPoly& p = entries_[i][j];
        if (p.variables() != vars_) throw std::invalid_argument("variable-list mismatch");
        if (p.is_zero()) continue;
        auto h = is_homogeneous(p);
        if (!h.homogeneous() || static_cast<long>(h.degree()) != rows_[i] - cols_[j])
          throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") violates the grading");
      }
    }
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<std::vector<MultiPoly>>& entries() const { return entries_; }
  const std::vector<long>& row_degrees() const { return rows_; }
  const std::vector<long>& col_degrees() const { return cols_; }

private:
  std::vector<std::string> vars_;
  std::vector<std::vector<MultiPoly>> entries_;
  std::vector<long> rows_, cols_;
};

/// The map (+) S(-deg f_j) -> S given by f_1..f_r, whose cokernel is S/I.
inline GradedMatrix ideal_to_graded_matrix(const std::vector<std::string>& variables,
                                           const std::vector<MultiPoly>& gens) {
  std::vector<long> cols;
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("zero generator has no degree");
    cols.push_back(-static_cast<long>(f.total_degree()));
  }
  return GradedMatrix(variables, {gens}, {0}, cols);
}

/// chi of the sheaf of the cokernel twisted by d, i.e. the Hilbert polynomial of S/I at d.
inline Integer euler_quotient(const GradedMatrix& gm, long d, const GrobnerLimits& limits = {}) {
  if (gm.row_degrees().size() != 1 || gm.row_degrees()[0] != 0)
    throw std::invalid_argument("only one-row matrices with row degree 0 are supported");
  Ideal I(gm.variables(), gm.entries()[0]);
  Rational v = hilbert_data(I, MonomialOrder::grevlex(), limits).hilbert_polynomial(d);
  return v.get_num();
}

/// Newton interpolation through distinct nodes; the result must have degree <= bound.
inline UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points, unsigned degree_bound) {
  const std::size_t k = points.size();
  if (k < degree_bound + 1) throw std::invalid_argument("need at least degree_bound + 1 nodes");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i].first == points[j].first) throw std::invalid_argument("interpolation nodes must be distinct");
  std::vector<Rational> coef;
  for (const auto& p : points) coef.push_back(p.second);
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - level].first);
  UniPoly result;
  for (std::size_t i = k; i-- > 0;) result = result * UniPoly::linear(-points[i].first) + UniPoly::constant(coef[i]);
  if (result.degree() > static_cast<int>(degree_bound))
    throw std::invalid_argument("data does not fit a polynomial of the given degree");
  return result;
}

}  // namespace hilbertkit
