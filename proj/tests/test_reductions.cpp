#include "hilbertkit/chern.hpp"
#include "hilbertkit/poly_io.hpp"
#include "hilbertkit/reductions.hpp"
#include "hilbertkit/transversality.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hilbertkit;
using namespace hilbertkit::testing;

namespace {

std::vector<Rational> assignment_point(unsigned n, std::uint64_t a) {
  std::vector<Rational> x{Rational(1)};
  for (unsigned i = 0; i < n; ++i) x.push_back(Rational(static_cast<long>((a >> i) & 1u)));
  return x;
}

MultiPoly clause_product(const std::vector<std::string>& vars, const std::vector<int>& clause) {
  MultiPoly x0 = MultiPoly::variable(vars, 0);
  MultiPoly f = MultiPoly::constant(vars, 1);
  for (int lit : clause) {
    MultiPoly xi = MultiPoly::variable(vars, static_cast<std::size_t>(std::abs(lit)));
    f *= lit > 0 ? x0 - xi : xi;
  }
  return f;
}

}  // namespace

TEST(Dimacs, ParseAndNormalize) {
  auto phi = parse_dimacs_text("c demo\np cnf 3 3\n1 -2 1 0\n2 -2 3 0\n-3 0\n");
  EXPECT_EQ(phi.num_vars(), 3u);
  ASSERT_EQ(phi.clauses().size(), 2u);
  EXPECT_EQ(phi.clauses()[0], (std::vector<int>{-2, 1}));
  EXPECT_EQ(phi.clauses()[1], (std::vector<int>{-3}));
  auto again = parse_dimacs_text(format_dimacs(phi));
  EXPECT_EQ(again.clauses(), phi.clauses());
  // clauses may span lines
  EXPECT_EQ(parse_dimacs_text("p cnf 2 1\n1\n2 0\n").clauses().size(), 1u);
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs_text("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_text("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_text("p cnf 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs_text("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_text("p cnf 2 1\n1 x 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_text("p dnf 2 1\n1 0\n"), ParseError);
  EXPECT_THROW(CnfFormula(2, {{0}}), std::invalid_argument);
  EXPECT_THROW(CnfFormula(2, {{-3}}), std::invalid_argument);
}

TEST(SatToIdeal, SingleClause) {
  CnfFormula phi(2, {{1, 2}});
  Ideal I = sat_to_ideal(phi);
  auto vars = I.variables();
  ASSERT_EQ(vars, (std::vector<std::string>{"x0", "x1", "x2"}));
  ASSERT_EQ(I.generators().size(), 3u);
  EXPECT_EQ(I.generators()[0], parse_poly("x1^2-x1*x0", vars));
  EXPECT_EQ(I.generators()[1], parse_poly("x2^2-x2*x0", vars));
  EXPECT_EQ(I.generators()[2], parse_poly("x0^2-x0*x1-x0*x2+x1*x2", vars));
  EXPECT_TRUE(I.homogeneous());
  EXPECT_EQ(hilbert_data(I).hilbert_polynomial, UniPoly::constant(3));
}

TEST(SatToIdeal, TrivialFormulas) {
  CnfFormula empty_clause(3, {{1}, {}});
  EXPECT_EQ(hilbert_data(sat_to_ideal(empty_clause)).hilbert_polynomial, UniPoly());
  for (unsigned n = 0; n <= 5; ++n)
    EXPECT_EQ(hilbert_data(sat_to_ideal(CnfFormula(n, {}))).hilbert_polynomial,
              UniPoly::constant(Rational(1L << n)));
}

TEST(CountSat, Examples) {
  EXPECT_EQ(count_sat_bruteforce(CnfFormula(2, {{1, 2}})), 3u);
  EXPECT_EQ(count_sat_bruteforce(CnfFormula(1, {{1}, {-1}})), 0u);
  EXPECT_EQ(count_sat_bruteforce(CnfFormula(3, {})), 8u);
  EXPECT_THROW(count_sat_bruteforce(CnfFormula(25, {})), ResourceError);

  auto phi = random_cnf(8, 12, 3, 17);
  Rational constant = hilbert_data(sat_to_ideal(phi), homogenizing_order(9)).hilbert_polynomial(0);
  EXPECT_EQ(constant, Rational(static_cast<unsigned long>(count_sat_bruteforce(phi))));
}

TEST(CountSat, RandomCnfIsDeterministic) {
  EXPECT_EQ(random_cnf(6, 5, 3, 9).clauses(), random_cnf(6, 5, 3, 9).clauses());
  EXPECT_THROW(random_cnf(2, 1, 3, 0), std::invalid_argument);
}

TEST(SatReduction, PinnedCorpusThreeCountsAgree) {
  auto corpus = pinned_cnfs();
  ASSERT_EQ(corpus.size(), 50u);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& phi = corpus[i];
    ASSERT_LE(phi.num_vars(), 10u);
    ASSERT_LE(phi.clauses().size(), 15u);
    SatReport r = sat_report(phi);
    EXPECT_LE(r.hilbert_polynomial.degree(), 0) << i;
    EXPECT_EQ(r.hilbert_polynomial(0), Rational(static_cast<unsigned long>(r.count_bruteforce))) << i;
    ASSERT_TRUE(r.zero_dim_count.has_value()) << i;
    EXPECT_EQ(*r.zero_dim_count, Integer(static_cast<unsigned long>(r.count_bruteforce))) << i;
    EXPECT_TRUE(r.agree) << i;
  }
}

TEST(SatReduction, DefaultOrderGivesSameConstant) {
  auto corpus = pinned_cnfs();
  for (std::size_t i = 0; i < corpus.size(); i += 10) {
    Ideal I = sat_to_ideal(corpus[i]);
    EXPECT_EQ(hilbert_data(I).hilbert_polynomial, hilbert_data(I, homogenizing_order(I.nvars())).hilbert_polynomial);
  }
}

TEST(SatReduction, InputConditionAtEveryZero) {
  std::size_t zeros = 0;
  for (const auto& phi : pinned_cnfs()) {
    Ideal I = sat_to_ideal(phi);
    InputInstance inst(I.generators(), phi.num_vars(), 0);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.num_vars()); ++a) {
      auto x = assignment_point(phi.num_vars(), a);
      ASSERT_EQ(is_zero_of(inst, x), phi.satisfied_by(a));
      if (!phi.satisfied_by(a)) continue;
      EXPECT_TRUE(input_condition_at(inst, x));
      ++zeros;
    }
  }
  EXPECT_GT(zeros, 100u);
}

TEST(HimDecide, Examples) {
  std::vector<std::string> v{"x0", "x1", "x2"};
  Ideal I(v, {parse_poly("x0*x2-x1^2", v)});
  EXPECT_TRUE(him_decide(I, parse_poly("x0^2*x2-x0*x1^2", v)));
  EXPECT_FALSE(him_decide(I, parse_poly("x0*x1", v)));
  EXPECT_FALSE(in_ideal(parse_poly("x0*x1", v), I));
  EXPECT_THROW(him_decide(I, MultiPoly::constant(v, 2)), std::invalid_argument);
  EXPECT_THROW(him_decide(I, parse_poly("x0+x1^2", v)), std::invalid_argument);
}

TEST(HimDecide, AgreesWithNormalFormsOnSatCorpus) {
  std::size_t members = 0, total = 0;
  for (unsigned i = 0; i < 30; ++i) {
    auto phi = random_cnf(3 + i % 3, 2 + i % 4, 2, 500 + i);
    Ideal I = sat_to_ideal(phi);
    auto vars = I.variables();
    std::mt19937_64 rng(900 + i);
    std::vector<MultiPoly> probes;
    // a random clause, a clause implied by a generator, and a multiple of a generator
    auto c = random_cnf(phi.num_vars(), 1, 2, 700 + i).clauses();
    if (!c.empty()) probes.push_back(clause_product(vars, c[0]));
    if (!phi.clauses().empty()) {
      auto wider = phi.clauses()[0];
      for (int v = 1; v <= static_cast<int>(phi.num_vars()); ++v)
        if (std::find(wider.begin(), wider.end(), v) == wider.end() &&
            std::find(wider.begin(), wider.end(), -v) == wider.end()) {
          wider.push_back(rng() % 2 ? v : -v);
          break;
        }
      probes.push_back(clause_product(vars, wider));
    }
    probes.push_back(MultiPoly::variable(vars, 1 + rng() % phi.num_vars()) * I.generators()[0]);
    for (const auto& g : probes) {
      bool expected = in_ideal(g, I);
      EXPECT_EQ(him_decide(I, g), expected) << i << " " << to_string(g);
      members += expected;
      ++total;
    }
  }
  EXPECT_GE(total, 60u);
  EXPECT_GT(members, 0u);
  EXPECT_LT(members, total);
}

TEST(GradedMatrix, FromIdeal) {
  std::vector<std::string> v{"x0", "x1", "x2"};
  auto f = parse_poly("x1^2*x2-x0^3", v);
  GradedMatrix gm = ideal_to_graded_matrix(v, {f});
  EXPECT_EQ(gm.col_degrees(), std::vector<long>{-3});
  EXPECT_EQ(gm.row_degrees(), std::vector<long>{0});
  EXPECT_EQ(euler_quotient(gm, 1), 3);
  EXPECT_EQ(euler_quotient(gm, 5), 15);
  EXPECT_THROW(ideal_to_graded_matrix(v, {MultiPoly(v)}), std::invalid_argument);
}

TEST(GradedMatrix, ZeroIdealGivesBinomials) {
  for (unsigned n = 1; n <= 4; ++n) {
    auto v = indexed_variables("x", n + 1);
    GradedMatrix gm(v, {{MultiPoly(v)}}, {0}, {-1});
    for (long d = 0; d <= 6; ++d) EXPECT_EQ(euler_quotient(gm, d), binomial(d + n, n));
  }
}

TEST(GradedMatrix, Validation) {
  std::vector<std::string> v{"x", "y"};
  auto x = parse_poly("x", v), xy = parse_poly("x*y", v);
  EXPECT_NO_THROW(GradedMatrix(v, {{x, xy}, {MultiPoly(v), x}}, {2, 1}, {1, 0}));
  EXPECT_THROW(GradedMatrix(v, {{x, x}}, {2}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(GradedMatrix(v, {{x + xy}}, {2}, {1}), std::invalid_argument);
  EXPECT_THROW(GradedMatrix(v, {{x}}, {1, 2}, {0}), std::invalid_argument);
  GradedMatrix two_rows(v, {{x}, {xy}}, {1, 2}, {0});
  EXPECT_THROW(euler_quotient(two_rows, 0), std::invalid_argument);
}

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate({{0, 1}, {1, 3}, {2, 6}}, 2), binom_poly(2, 2));
  EXPECT_EQ(interpolate({{0, 5}, {1, 5}, {7, 5}}, 2), UniPoly::constant(5));
  EXPECT_EQ(interpolate({{0, 0}, {1, 4}, {2, 8}}, 2), UniPoly({0, 4}));
  EXPECT_EQ(interpolate({{make_rational(1, 2), 1}, {Rational(-3), 2}}, 1)(make_rational(1, 2)), 1);
  EXPECT_THROW(interpolate({{0, 1}, {1, 3}}, 2), std::invalid_argument);
  EXPECT_THROW(interpolate({{0, 1}, {0, 1}, {1, 2}}, 2), std::invalid_argument);
  EXPECT_THROW(interpolate({{0, 0}, {1, 1}, {2, 4}}, 1), std::invalid_argument);
}

TEST(Interpolate, RandomPolynomialsRecovered) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned deg = static_cast<unsigned>(uniform_int(rng, 0, 6));
    std::vector<Rational> c;
    for (unsigned i = 0; i <= deg; ++i) c.push_back(random_rational(rng, 20));
    UniPoly p(c);
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& x : random_distinct(rng, deg + 1 + trial % 3, 30)) pts.emplace_back(x, p(x));
    EXPECT_EQ(interpolate(pts, deg), p);
  }
}

TEST(Interpolate, EulerCharacteristicsGiveHrrOnGrid) {
  for (const auto& ci : ci_grid()) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (long d = 0; d <= static_cast<long>(ci.m()); ++d) pts.emplace_back(Rational(d), Rational(euler_char_twist(ci, d)));
    EXPECT_EQ(interpolate(pts, ci.m()), hilbert_poly_hrr(ci)) << ci.to_string();
  }
}
