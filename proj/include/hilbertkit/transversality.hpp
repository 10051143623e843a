#pragma once

// Schubert cells of the Grassmannian of projective m-planes in P^n relative to a flag,
// the rank test for generalized polar varieties, and an exact pointwise test of
// transversality of the Gauss map to a Schubert cell via implicit second derivatives.

#include "hilbertkit/matrix.hpp"
#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/partition.hpp"
#include "hilbertkit/rational.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbertkit {

/// Rank over Q by clearing denominators row-wise and running Bareiss over Z.
inline std::size_t rank_fraction_free(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rank(std::move(z));
}

/// Stacks the rows of `top` over those of `bottom`.
inline QMatrix stack(const QMatrix& top, const QMatrix& bottom) {
  QMatrix out = top;
  for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

/// A complete flag F_0 < F_1 < ... < F_n in P^n. Column i of `basis` is l_i and F_i is
/// spanned by l_0..l_i. Row k of `dual` is the form l*_{n-k} (a row of basis^{-1}), so
/// the first n - j rows of `dual` cut out F_j.
class Flag {
public:
  static Flag from_basis(QMatrix basis) {
    const std::size_t n1 = basis.rows();
    if (basis.cols() != n1 || n1 == 0) throw std::invalid_argument("flag basis must be square");
    if (rank_fraction_free(basis) != n1) throw std::invalid_argument("flag basis is singular");
    QMatrix inv = inverse(basis);
    QMatrix dual(0, n1);
    for (std::size_t k = 0; k + 1 < n1; ++k) dual.append_row(inv.row(n1 - 1 - k));
    Flag f;
    f.basis_ = std::move(basis);
    f.dual_ = std::move(dual);
    return f;
  }

  /// Recovers a basis from n independent row forms: l_j spans the part of
  /// ker(first n-j rows) not already in F_{j-1}.
  static Flag from_dual(const QMatrix& dual) {
    const std::size_t n = dual.rows();
    if (dual.cols() != n + 1) throw std::invalid_argument("flag dual matrix must be n x (n+1)");
    QMatrix basis(n + 1, n + 1);
    QMatrix span(0, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      QMatrix forms(0, n + 1);
      for (std::size_t k = 0; k < n - j; ++k) forms.append_row(dual.row(k));
      std::vector<std::vector<Rational>> ker;
      if (forms.rows() == 0) {
        for (std::size_t i = 0; i <= n; ++i) {
          std::vector<Rational> e(n + 1, Rational(0));
          e[i] = 1;
          ker.push_back(e);
        }
      } else {
        ker = kernel_basis(forms);
      }
      bool found = false;
      for (const auto& v : ker) {
        QMatrix trial = span;
        trial.append_row(v);
        if (rank_fraction_free(trial) == j + 1) {
          span = trial;
          for (std::size_t i = 0; i <= n; ++i) basis(i, j) = v[i];
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("dual matrix does not define a complete flag");
    }
    return from_basis(std::move(basis));
  }

  static Flag standard(std::size_t n) { return from_basis(QMatrix::identity(n + 1, Rational(0), Rational(1))); }

  std::size_t n() const { return basis_.rows() - 1; }
  const QMatrix& basis() const { return basis_; }
  const QMatrix& dual() const { return dual_; }

  /// First `count` rows of the dual matrix: the forms cutting out F_{n-count}.
  QMatrix leading_forms(std::size_t count) const {
    QMatrix out(0, n() + 1);
    for (std::size_t k = 0; k < count; ++k) out.append_row(dual_.row(k));
    return out;
  }

private:
  QMatrix basis_, dual_;
};

namespace detail {

inline long draw_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

/// Integer flag with entries in [-9, 9] drawn from the seed; redrawn until nonsingular.
inline Flag random_flag(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    QMatrix b(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) b(i, j) = detail::draw_int(rng, -9, 9);
    if (rank_fraction_free(b) == n + 1) return Flag::from_basis(std::move(b));
  }
}

/// An (m+1)-dimensional linear subspace of Q^{n+1}, i.e. a point of G(m, n).
struct GrassPoint {
  QMatrix span;  // (m+1) x (n+1), full row rank
  std::size_t m() const { return span.rows() - 1; }
  std::size_t n() const { return span.cols() - 1; }
};

/// Affine dimensions dim(A cap F_j) for j = -1, 0, ..., n (index j + 1).
inline std::vector<std::size_t> intersection_dims(const GrassPoint& A, const Flag& flag) {
  const std::size_t n = flag.n();
  std::vector<std::size_t> dims{0};
  QMatrix stacked = A.span;
  for (std::size_t j = 0; j <= n; ++j) {
    stacked.append_row(flag.basis().col(j));
    dims.push_back((A.m() + 1) + (j + 1) - rank_fraction_free(stacked));
  }
  return dims;
}

/// Positions j where dim(A cap F_j) jumps.
inline std::vector<unsigned> jump_positions(const GrassPoint& A, const Flag& flag) {
  auto dims = intersection_dims(A, flag);
  std::vector<unsigned> out;
  for (std::size_t j = 1; j < dims.size(); ++j)
    if (dims[j] > dims[j - 1]) out.push_back(static_cast<unsigned>(j - 1));
  return out;
}

/// The admissible partition of the unique cell containing A.
inline Partition cell_of(const GrassPoint& A, const Flag& flag) {
  return JumpSequence(jump_positions(A, flag), static_cast<unsigned>(flag.n())).to_partition();
}

/// Cell membership from the jump sequence of dim(A cap F_j).
inline bool in_cell_by_jumps(const GrassPoint& A, const Flag& flag, const Partition& mu) {
  return jump_positions(A, flag) == jumps(mu, static_cast<unsigned>(A.n()), static_cast<unsigned>(A.m())).sigma();
}

/// Membership in the Schubert variety Omega_lambda from the dual forms:
/// dim(A cap F_{sigma_i}) >= i + 1 (affine) for every i.
inline bool in_schubert_variety(const GrassPoint& A, const Flag& flag, const Partition& lambda) {
  const unsigned n = static_cast<unsigned>(A.n()), m = static_cast<unsigned>(A.m());
  auto sigma = jumps(lambda, n, m).sigma();
  for (unsigned i = 0; i <= m; ++i) {
    QMatrix forms = flag.leading_forms(n - sigma[i]);
    std::size_t dim = (m + 1) - (forms.rows() ? rank_fraction_free(forms * A.span.transpose()) : 0);
    if (dim < i + 1) return false;
  }
  return true;
}

/// Chart alpha_mu(A): with B the coordinates of A's rows in the basis l, A lies in U_mu iff
/// the sigma-columns of B are invertible; then entry (s, i) is the s-th non-sigma column
/// of row i after normalizing the sigma block to the identity.
inline std::optional<QMatrix> schubert_cell_coords(const GrassPoint& A, const Flag& flag, const Partition& mu) {
  const std::size_t n = A.n(), m = A.m();
  auto sigma = jumps(mu, static_cast<unsigned>(n), static_cast<unsigned>(m)).sigma();
  QMatrix B = (inverse(flag.basis()) * A.span.transpose()).transpose();
  QMatrix pivot_block(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t k = 0; k <= m; ++k) pivot_block(i, k) = B(i, sigma[k]);
  if (rank_fraction_free(pivot_block) != m + 1) return std::nullopt;
  QMatrix E = solve(pivot_block, B);
  std::vector<bool> is_pivot(n + 1, false);
  for (auto s : sigma) is_pivot[s] = true;
  QMatrix chart(n - m, m + 1);
  std::size_t s = 0;
  for (std::size_t c = 0; c <= n; ++c) {
    if (is_pivot[c]) continue;
    for (std::size_t i = 0; i <= m; ++i) chart(s, i) = E(i, c);
    ++s;
  }
  return chart;
}

/// True at chart positions (s, i) that the cell forces to zero: s >= sigma_i - i.
inline bool cell_zero_position(const std::vector<unsigned>& sigma, std::size_t s, std::size_t i) {
  return s + i >= sigma[i];
}

inline bool chart_in_cell(const QMatrix& chart, const std::vector<unsigned>& sigma) {
  for (std::size_t s = 0; s < chart.rows(); ++s)
    for (std::size_t i = 0; i < chart.cols(); ++i)
      if (cell_zero_position(sigma, s, i) && chart(s, i) != 0) return false;
  return true;
}

/// Cell membership from the chart zero pattern.
inline bool in_cell_by_chart(const GrassPoint& A, const Flag& flag, const Partition& mu) {
  auto chart = schubert_cell_coords(A, flag, mu);
  if (!chart) return false;
  return chart_in_cell(*chart, jumps(mu, static_cast<unsigned>(A.n()), static_cast<unsigned>(A.m())).sigma());
}

/// A flag for which A lies in e_mu: random vectors of A at the positions sigma_i and
/// random vectors elsewhere, redrawn until nonsingular and in the cell.
inline Flag adapted_flag(const GrassPoint& A, const Partition& mu, std::uint64_t seed) {
  const std::size_t n = A.n(), m = A.m();
  auto sigma = jumps(mu, static_cast<unsigned>(n), static_cast<unsigned>(m)).sigma();
  std::mt19937_64 rng(seed);
  while (true) {
    QMatrix b(n + 1, n + 1);
    std::size_t next = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (next <= m && sigma[next] == j) {
        for (std::size_t i = 0; i <= m; ++i) {
          Rational w = detail::draw_int(rng, -9, 9);
          for (std::size_t c = 0; c <= n; ++c) b(c, j) += w * A.span(i, c);
        }
        ++next;
      } else {
        for (std::size_t c = 0; c <= n; ++c) b(c, j) = detail::draw_int(rng, -9, 9);
      }
    }
    if (rank_fraction_free(b) != n + 1) continue;
    Flag f = Flag::from_basis(std::move(b));
    if (in_cell_by_jumps(A, f, mu)) return f;
  }
}

/// Homogeneous equations f_1..f_r in x0..xn whose zero set has an m-dimensional smooth part.
struct InputInstance {
  std::vector<MultiPoly> f;
  unsigned n = 0;
  unsigned m = 0;

  InputInstance(std::vector<MultiPoly> eqs, unsigned n_, unsigned m_) : f(std::move(eqs)), n(n_), m(m_) {
    if (m > n) throw std::invalid_argument("m exceeds n");
    for (const auto& g : f) {
      if (g.nvars() != n + 1) throw std::invalid_argument("equations must live in n+1 variables");
      if (!is_homogeneous(g).homogeneous()) throw std::invalid_argument("equations must be homogeneous");
    }
  }
  std::size_t r() const { return f.size(); }
};

inline bool is_zero_of(const InputInstance& inst, const std::vector<Rational>& x) {
  if (x.size() != inst.n + 1) throw std::invalid_argument("point has the wrong number of coordinates");
  for (const auto& g : inst.f)
    if (evaluate(g, x) != 0) return false;
  return true;
}

/// Scales a nonzero point so its first nonzero coordinate is 1.
inline std::vector<Rational> normalize_point(std::vector<Rational> x) {
  for (const auto& c : x)
    if (c != 0) {
      Rational inv = 1 / c;
      for (auto& v : x) v *= inv;
      return x;
    }
  throw std::invalid_argument("the zero vector is not a projective point");
}

/// r x (n+1) matrix of partial derivatives at x.
inline QMatrix jacobian_at(const InputInstance& inst, const std::vector<Rational>& x) {
  QMatrix J(inst.r(), inst.n + 1);
  for (std::size_t s = 0; s < inst.r(); ++s)
    for (std::size_t j = 0; j <= inst.n; ++j) J(s, j) = evaluate(partial_derivative(inst.f[s], j), x);
  return J;
}

inline QMatrix hessian_at(const MultiPoly& f, const std::vector<Rational>& x) {
  const std::size_t n1 = f.nvars();
  QMatrix H(n1, n1);
  for (std::size_t i = 0; i < n1; ++i) {
    MultiPoly fi = partial_derivative(f, i);
    for (std::size_t j = i; j < n1; ++j) H(i, j) = H(j, i) = evaluate(partial_derivative(fi, j), x);
  }
  return H;
}

namespace detail {
inline void require_zero(const InputInstance& inst, const std::vector<Rational>& x) {
  bool nonzero = false;
  for (const auto& c : x) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("the zero vector is not a projective point");
  if (!is_zero_of(inst, x)) throw std::invalid_argument("point is not a zero of the equations");
}
}  // namespace detail

/// rank of the Jacobian at x is at least n - m.
inline bool input_condition_at(const InputInstance& inst, const std::vector<Rational>& x) {
  detail::require_zero(inst, x);
  return inst.r() > 0 ? rank_fraction_free(jacobian_at(inst, x)) >= inst.n - inst.m : inst.n == inst.m;
}

/// The projective tangent space at a smooth point: the kernel of the Jacobian.
inline GrassPoint gauss_point(const InputInstance& inst, const std::vector<Rational>& x) {
  detail::require_zero(inst, x);
  std::vector<std::vector<Rational>> ker;
  if (inst.r() == 0) {
    if (inst.n != inst.m) throw std::invalid_argument("Jacobian rank differs from n - m");
    for (std::size_t i = 0; i <= inst.n; ++i) {
      std::vector<Rational> e(inst.n + 1, Rational(0));
      e[i] = 1;
      ker.push_back(e);
    }
  } else {
    QMatrix J = jacobian_at(inst, x);
    if (rank_fraction_free(J) != inst.n - inst.m) throw std::invalid_argument("Jacobian rank differs from n - m");
    ker = kernel_basis(J);
  }
  GrassPoint A{QMatrix(0, inst.n + 1)};
  for (const auto& v : ker) A.span.append_row(v);
  return A;
}

/// Rank test for x in Q_lambda(F): rank [first n - sigma_i dual rows; J(x)] <= n - i for all i.
inline bool in_Q_lambda(const InputInstance& inst, const std::vector<Rational>& x, const Flag& flag,
                        const Partition& lambda) {
  detail::require_zero(inst, x);
  auto sigma = jumps(lambda, inst.n, inst.m).sigma();
  QMatrix J = inst.r() ? jacobian_at(inst, x) : QMatrix(0, inst.n + 1);
  for (unsigned i = 0; i <= inst.m; ++i) {
    QMatrix M = stack(flag.leading_forms(inst.n - sigma[i]), J);
    std::size_t rk = M.rows() ? rank_fraction_free(M) : 0;
    if (rk > inst.n - i) return false;
  }
  return true;
}

/// Everything the pointwise transversality decision looks at. The two hypotheses of the
/// implication (x on the smooth part, phi(x) in the cell) are reported separately; the
/// conclusion is only evaluated when both hold.
struct TransversalityReport {
  bool on_variety = false;
  bool smooth = false;
  bool in_cell = false;
  std::optional<QMatrix> chart;  // alpha_mu(T_x V)
  std::vector<QMatrix> second_derivatives;  // D_j(t, i) = d^2 h_t / dX_i dX_j
  std::vector<std::size_t> equations;  // rows of f used for the implicit function
  std::size_t span_rank = 0;  // rank of the D_j modulo the cell's tangent space
  std::size_t codimension = 0;  // |mu|
  std::optional<bool> transversal;

  /// The implication "on V and in the cell => transversal".
  bool implication_holds() const { return !(on_variety && smooth && in_cell) || transversal.value_or(false); }
};

/// Works in coordinates z adapted to L_mu + Lbar_mu (x = M z, M = [l_sigma | l_rest]). V is
/// locally the graph z'' = h(z'). With B and B' the Jacobian blocks on z'' and z',
/// Dh = -B^{-1} B'. With W = [I; Dh] the tangent frame and R_s = W^T Hess_z(g_s) W,
/// d^2 h / dz_i dz_j = -B^{-1} R(i, j).
inline TransversalityReport analyze_transversality(const InputInstance& inst, const std::vector<Rational>& x,
                                                   const Flag& flag, const Partition& mu) {
  TransversalityReport rep;
  const std::size_t n = inst.n, m = inst.m, c = n - m;
  rep.codimension = mu.size();
  if (x.size() != n + 1) throw std::invalid_argument("point has the wrong number of coordinates");
  bool nonzero = false;
  for (const auto& v : x) nonzero = nonzero || v != 0;
  rep.on_variety = nonzero && is_zero_of(inst, x);
  if (!rep.on_variety) return rep;
  QMatrix J = inst.r() ? jacobian_at(inst, x) : QMatrix(0, n + 1);
  rep.smooth = (inst.r() ? rank_fraction_free(J) : 0) == c;
  if (!rep.smooth) return rep;

  GrassPoint A = gauss_point(inst, x);
  rep.chart = schubert_cell_coords(A, flag, mu);
  auto sigma = jumps(mu, inst.n, inst.m).sigma();
  rep.in_cell = rep.chart && chart_in_cell(*rep.chart, sigma);
  if (!rep.in_cell) return rep;

  // adapted coordinates: pivot basis vectors first, then the rest in increasing order
  std::vector<std::size_t> order(sigma.begin(), sigma.end());
  std::vector<bool> is_pivot(n + 1, false);
  for (auto s : sigma) is_pivot[s] = true;
  for (std::size_t j = 0; j <= n; ++j)
    if (!is_pivot[j]) order.push_back(j);
  QMatrix M(n + 1, n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= n; ++i) M(i, k) = flag.basis()(i, order[k]);
  QMatrix JZ = J * M;

  // choose c equations whose block on z'' is invertible
  QMatrix blockT(c, inst.r());
  for (std::size_t s = 0; s < inst.r(); ++s)
    for (std::size_t t = 0; t < c; ++t) blockT(t, s) = JZ(s, m + 1 + t);
  QMatrix reduced = blockT;
  auto picked = rref_in_place(reduced);
  if (picked.size() != c) throw std::logic_error("Jacobian block on the complementary coordinates is singular");
  rep.equations = picked;

  QMatrix B(c, c), Bprime(c, m + 1);
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t t = 0; t < c; ++t) B(a, t) = JZ(picked[a], m + 1 + t);
    for (std::size_t i = 0; i <= m; ++i) Bprime(a, i) = JZ(picked[a], i);
  }
  QMatrix Dh = solve(B, Bprime);
  for (std::size_t t = 0; t < c; ++t)
    for (std::size_t i = 0; i <= m; ++i) Dh(t, i) = -Dh(t, i);
  if (!(Dh == *rep.chart)) throw std::logic_error("implicit first derivatives disagree with the chart");

  QMatrix W(n + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i) W(i, i) = 1;
  for (std::size_t t = 0; t < c; ++t)
    for (std::size_t i = 0; i <= m; ++i) W(m + 1 + t, i) = Dh(t, i);
  QMatrix frame = M * W;  // tangent frame in the original coordinates
  std::vector<QMatrix> R;
  for (auto s : picked) R.push_back(frame.transpose() * hessian_at(inst.f[s], x) * frame);

  for (std::size_t j = 0; j <= m; ++j) {
    QMatrix rhs(c, m + 1);
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t i = 0; i <= m; ++i) rhs(a, i) = -R[a](i, j);
    rep.second_derivatives.push_back(solve(B, rhs));
  }

  // project each D_j onto the positions the cell forces to zero
  QMatrix proj(0, rep.codimension);
  for (const auto& D : rep.second_derivatives) {
    std::vector<Rational> row;
    for (std::size_t t = 0; t < c; ++t)
      for (std::size_t i = 0; i <= m; ++i)
        if (cell_zero_position(sigma, t, i)) row.push_back(D(t, i));
    if (!row.empty()) proj.append_row(row);
  }
  rep.span_rank = proj.rows() ? rank_fraction_free(proj) : 0;
  rep.transversal = rep.span_rank == rep.codimension;
  return rep;
}

/// Transversality of the Gauss map to e_mu(F) at x. Requires x smooth on V and
/// phi(x) in the cell.
inline bool transversal_at(const InputInstance& inst, const std::vector<Rational>& x, const Flag& flag,
                           const Partition& mu) {
  auto rep = analyze_transversality(inst, x, flag, mu);
  if (!rep.on_variety) throw std::invalid_argument("point is not a zero of the equations");
  if (!rep.smooth) throw std::invalid_argument("Jacobian rank differs from n - m");
  if (!rep.in_cell) throw std::invalid_argument("Gauss image is not in the Schubert cell");
  return *rep.transversal;
}

}  // namespace hilbertkit
