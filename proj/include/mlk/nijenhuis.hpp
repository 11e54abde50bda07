#pragma once

// Nijenhuis layer: the square-bracket deformation machinery. An operator N
// is Nijenhuis when [Nx,Ny] + N^2[x,y] = N[Nx,y] + N[x,Ny]; the deformed
// bracket [x,y]. = [Nx,y] + [x,Ny] - N[x,y] then makes (A, [,], [,].) a
// compatible pencil. Module-side analogues follow the same pattern.

#include <string>
#include <vector>

#include "mlk/mocklie.hpp"

namespace mlk {

struct NijenhuisAlgebra {
  MockLieAlgebra base;
  Matrix op;  // N, dim x dim
};

struct NijenhuisRepresentation {
  Representation rep;
  Matrix alpha;  // operator on the module, space_dim x space_dim
};

namespace detail {

inline void require_nijenhuis(const NijenhuisAlgebra& na, const std::string& who) {
  require_algebra(na.base, who);
  require_square(na.op, na.base.dim, who, "operator");
}

inline void require_nijenhuis_rep(const NijenhuisRepresentation& nr, const std::string& who) {
  require_square(nr.alpha, nr.rep.space_dim, who, "module operator");
}

}  // namespace detail

// [Nx,Ny] + N^2[x,y] = N[Nx,y] + N[x,Ny] on every basis pair.
inline CheckReport check_nijenhuis(const NijenhuisAlgebra& na) {
  detail::require_nijenhuis(na, "check_nijenhuis");
  const MockLieAlgebra& a = na.base;
  const Matrix& n = na.op;
  ReportBuilder rb("nijenhuis");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec ni = n.col(i), nj = n.col(j);
      Vec lhs = add(a.bracket_of(ni, nj), n.apply(n.apply(a.bracket_basis(i, j))));
      Vec ei = zero_vec(a.dim), ej = zero_vec(a.dim);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      Vec rhs = add(n.apply(a.bracket_of(ni, ej)), n.apply(a.bracket_of(ei, nj)));
      rb.require({i, j}, std::move(lhs), std::move(rhs));
    }
  return rb.finish();
}

inline CheckReport check_nijenhuis(const MockLieAlgebra& a, const Matrix& op) {
  return check_nijenhuis(NijenhuisAlgebra{a, op});
}

// [x,y]. = [Nx,y] + [x,Ny] - N[x,y]. Requires the operator to pass
// check_nijenhuis; the deformed bracket then squares with the original one
// (compatibility and N([x,y].) = [Nx,Ny] are covered by the property suite).
inline MockLieAlgebra deformed_bracket(const NijenhuisAlgebra& na) {
  detail::require_nijenhuis(na, "deformed_bracket");
  if (CheckReport r = check_nijenhuis(na); !r.pass) throw HypothesisError("deformed_bracket", r);
  const MockLieAlgebra& a = na.base;
  const Matrix& n = na.op;
  MockLieAlgebra d{a.dim, Tensor3(a.dim, a.dim, a.dim)};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        Q v = 0;
        for (int m = 0; m < a.dim; ++m)
          v += n(m, i) * a.bracket(m, j, k) + n(m, j) * a.bracket(i, m, k) -
               a.bracket(i, j, m) * n(k, m);
        d.bracket(i, j, k) = v;
      }
  return d;
}

// Two brackets on one space are compatible when their mixed six-term cyclic
// sum vanishes on every basis triple.
inline CheckReport check_pencil_compatibility(const MockLieAlgebra& a, const MockLieAlgebra& b) {
  detail::require_algebra(a, "check_pencil_compatibility");
  detail::require_algebra(b, "check_pencil_compatibility");
  if (a.dim != b.dim) throw DimensionError("check_pencil_compatibility: dimensions differ");
  ReportBuilder rb("pencil");
  const int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec sum(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m)
          for (int l = 0; l < n; ++l) {
            Q t = a.bracket(j, k, m) * b.bracket(i, m, l) + b.bracket(j, k, m) * a.bracket(i, m, l) +
                  a.bracket(k, i, m) * b.bracket(j, m, l) + b.bracket(k, i, m) * a.bracket(j, m, l) +
                  a.bracket(i, j, m) * b.bracket(k, m, l) + b.bracket(i, j, m) * a.bracket(k, m, l);
            sum[static_cast<std::size_t>(l)] += t;
          }
        rb.require_zero({i, j, k}, std::move(sum));
      }
  return rb.finish();
}

// Module-side pencil: rho represents the first bracket, phi the second, and
// rho([x,y].) + phi([x,y]) = -(phi(x)rho(y) + rho(x)phi(y) + phi(y)rho(x) + rho(y)phi(x)).
inline CheckReport check_rep_pencil(const MockLieAlgebra& a, const MockLieAlgebra& a_dot,
                                    const Representation& rho, const Representation& phi) {
  detail::require_algebra(a, "check_rep_pencil");
  detail::require_algebra(a_dot, "check_rep_pencil");
  detail::require_rep(a, rho, "check_rep_pencil");
  detail::require_rep(a, phi, "check_rep_pencil");
  if (a.dim != a_dot.dim) throw DimensionError("check_rep_pencil: dimensions differ");
  if (rho.space_dim != phi.space_dim)
    throw DimensionError("check_rep_pencil: module dimensions differ");
  ReportBuilder rb("rep-pencil");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Matrix lhs = rho.of(a_dot.bracket_basis(i, j)) + phi.of(a.bracket_basis(i, j));
      const Matrix &ri = rho.action[static_cast<std::size_t>(i)], &rj = rho.action[static_cast<std::size_t>(j)];
      const Matrix &pi = phi.action[static_cast<std::size_t>(i)], &pj = phi.action[static_cast<std::size_t>(j)];
      Matrix rhs = Q(-1) * (pi * rj + ri * pj + pj * ri + rj * pi);
      rb.require({i, j}, lhs.flat(), rhs.flat());
    }
  return rb.finish();
}

// Module Nijenhuis condition: rho(Nx)alpha + alpha^2 rho(x) = alpha rho(Nx) + alpha rho(x) alpha,
// checked column by column on (basis element, basis vector) pairs.
inline CheckReport check_nijenhuis_rep(const NijenhuisAlgebra& na, const NijenhuisRepresentation& nr) {
  detail::require_nijenhuis(na, "check_nijenhuis_rep");
  detail::require_rep(na.base, nr.rep, "check_nijenhuis_rep");
  detail::require_nijenhuis_rep(nr, "check_nijenhuis_rep");
  ReportBuilder rb("nijenhuis-rep");
  const Matrix& alpha = nr.alpha;
  for (int i = 0; i < na.base.dim; ++i) {
    Matrix rho_ni = nr.rep.of(na.op.col(i));
    const Matrix& rho_i = nr.rep.action[static_cast<std::size_t>(i)];
    Matrix lhs = rho_ni * alpha + alpha * (alpha * rho_i);
    Matrix rhs = alpha * rho_ni + alpha * (rho_i * alpha);
    for (int b = 0; b < nr.rep.space_dim; ++b) rb.require({i, b}, lhs.col(b), rhs.col(b));
  }
  return rb.finish();
}

// phi(x) = rho(Nx) + rho(x)alpha - alpha rho(x), a representation of the
// deformed algebra. The intertwining identity rho(Nx)alpha = alpha phi(x) is
// implied by the module Nijenhuis condition and re-checked here.
inline Representation deformed_rep(const NijenhuisAlgebra& na, const NijenhuisRepresentation& nr) {
  detail::require_nijenhuis(na, "deformed_rep");
  detail::require_rep(na.base, nr.rep, "deformed_rep");
  detail::require_nijenhuis_rep(nr, "deformed_rep");
  if (CheckReport r = check_nijenhuis_rep(na, nr); !r.pass) throw HypothesisError("deformed_rep", r);
  Representation phi{na.base.dim, nr.rep.space_dim, {}};
  for (int i = 0; i < na.base.dim; ++i) {
    Matrix rho_ni = nr.rep.of(na.op.col(i));
    const Matrix& rho_i = nr.rep.action[static_cast<std::size_t>(i)];
    Matrix p = rho_ni + rho_i * nr.alpha - nr.alpha * rho_i;
    if (!(rho_ni * nr.alpha == nr.alpha * p))
      throw std::logic_error("deformed_rep: intertwining identity failed despite valid hypotheses");
    phi.action.push_back(std::move(p));
  }
  return phi;
}

// Admissibility of an extra module operator beta against (rho, N):
// beta rho(Nx) + rho(x) beta^2 = rho(Nx) beta + beta rho(x) beta.
inline CheckReport check_admissible(const NijenhuisAlgebra& na, const Representation& rep,
                                    const Matrix& beta) {
  detail::require_nijenhuis(na, "check_admissible");
  detail::require_rep(na.base, rep, "check_admissible");
  detail::require_square(beta, rep.space_dim, "check_admissible", "beta");
  ReportBuilder rb("admissible");
  for (int i = 0; i < na.base.dim; ++i) {
    Matrix rho_ni = rep.of(na.op.col(i));
    const Matrix& rho_i = rep.action[static_cast<std::size_t>(i)];
    Matrix lhs = beta * rho_ni + rho_i * (beta * beta);
    Matrix rhs = rho_ni * beta + beta * (rho_i * beta);
    for (int b = 0; b < rep.space_dim; ++b) rb.require({i, b}, lhs.col(b), rhs.col(b));
  }
  return rb.finish();
}

// Algebra-side admissibility of S against N:
// S([Nx,y]) + [x,S^2 y] = [Nx,Sy] + S([x,Sy]).
inline CheckReport check_adjoint_admissible(const NijenhuisAlgebra& na, const Matrix& s) {
  detail::require_nijenhuis(na, "check_adjoint_admissible");
  detail::require_square(s, na.base.dim, "check_adjoint_admissible", "S");
  const MockLieAlgebra& a = na.base;
  ReportBuilder rb("adjoint-admissible");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec ei = zero_vec(a.dim), ej = zero_vec(a.dim);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      Vec ni = na.op.col(i);
      Vec lhs = add(s.apply(a.bracket_of(ni, ej)), a.bracket_of(ei, s.apply(s.col(j))));
      Vec rhs = add(a.bracket_of(ni, s.col(j)), s.apply(a.bracket_of(ei, s.col(j))));
      rb.require({i, j}, std::move(lhs), std::move(rhs));
    }
  return rb.finish();
}

// Semidirect sum carrying the block operator N (+) alpha. Hypotheses (module
// validity, Nijenhuis operator, module Nijenhuis condition) are enforced;
// the result passes check_nijenhuis, which the property suite pins down.
inline NijenhuisAlgebra nijenhuis_semidirect(const NijenhuisAlgebra& na,
                                             const NijenhuisRepresentation& nr) {
  detail::require_nijenhuis(na, "nijenhuis_semidirect");
  detail::require_rep(na.base, nr.rep, "nijenhuis_semidirect");
  detail::require_nijenhuis_rep(nr, "nijenhuis_semidirect");
  if (CheckReport r = check_representation(na.base, nr.rep); !r.pass)
    throw HypothesisError("nijenhuis_semidirect", r);
  if (CheckReport r = check_nijenhuis(na); !r.pass) throw HypothesisError("nijenhuis_semidirect", r);
  if (CheckReport r = check_nijenhuis_rep(na, nr); !r.pass)
    throw HypothesisError("nijenhuis_semidirect", r);
  return {semidirect_product(na.base, nr.rep), block_diag(na.op, nr.alpha)};
}

// Coalgebra-side Nijenhuis condition for S:
// (S(x)S)delta + delta S^2 = (S(x)id)(delta S) + (id(x)S)(delta S),
// one n^2 residual per basis input.
inline CheckReport check_nijenhuis_coalgebra(const MockLieCoalgebra& c, const Matrix& s) {
  detail::require_coalgebra(c, "check_nijenhuis_coalgebra");
  detail::require_square(s, c.dim, "check_nijenhuis_coalgebra", "S");
  const int n = c.dim;
  const Tensor3& d = c.cobracket;
  Matrix s2 = s * s;
  ReportBuilder rb("nijenhuis-coalgebra");
  for (int i = 0; i < n; ++i) {
    Matrix lhs(n, n), rhs(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Q& v = d(i, j, k);
        if (v == 0) continue;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) lhs(a, b) += v * s(a, j) * s(b, k);
      }
    for (int m = 0; m < n; ++m) {
      if (s2(m, i) != 0)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) lhs(a, b) += s2(m, i) * d(m, a, b);
      if (s(m, i) != 0)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Q& v = d(m, j, k);
            if (v == 0) continue;
            for (int a = 0; a < n; ++a) rhs(a, k) += s(m, i) * v * s(a, j);
            for (int b = 0; b < n; ++b) rhs(j, b) += s(m, i) * v * s(b, k);
          }
    }
    rb.require({i}, lhs.flat(), rhs.flat());
  }
  return rb.finish();
}

// Adjoint of N with respect to a nondegenerate form: B(Nx, y) = B(x, N^ y),
// i.e. N^ = G^{-1} N^T G computed by exact elimination.
inline Matrix adjoint_wrt_form(const Matrix& n, const Matrix& gram) {
  if (gram.rows() != gram.cols()) throw DimensionError("adjoint_wrt_form: gram must be square");
  detail::require_square(n, gram.rows(), "adjoint_wrt_form", "operator");
  Matrix rhs = n.transpose() * gram;
  Matrix out(gram.rows(), gram.cols());
  for (int j = 0; j < gram.cols(); ++j) {
    LinearSolution sol = solve_linear(gram, rhs.col(j));
    if (!sol.x || sol.rank < gram.rows())
      throw Error("adjoint_wrt_form: form is degenerate (rank " + std::to_string(sol.rank) + " of " +
                  std::to_string(gram.rows()) + ")");
    for (int i = 0; i < gram.rows(); ++i) out(i, j) = (*sol.x)[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace mlk
