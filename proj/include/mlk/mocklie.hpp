#pragma once

// Base structures: commutative algebras with the cyclic Jacobi law, their
// coalgebra mirrors, representations, and invariant bilinear forms.
//
// Conventions, used everywhere downstream:
//   bracket(i,j,k):   [e_i, e_j] = sum_k bracket(i,j,k) e_k
//   cobracket(i,j,k): delta(e_i) = sum_{j,k} cobracket(i,j,k) e_j (x) e_k
//   rep action[i]:    column-action matrix of e_i on the module
//   form gram(i,j):   B(e_i, e_j)
// Indices are 0-based in code and 1-based in reports and files.

#include <string>
#include <vector>

#include "mlk/linalg.hpp"
#include "mlk/report.hpp"

namespace mlk {

struct MockLieAlgebra {
  int dim = 0;
  Tensor3 bracket;  // dim x dim x dim

  Vec bracket_basis(int i, int j) const {
    Vec v(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] = bracket(i, j, k);
    return v;
  }

  Vec bracket_of(const Vec& u, const Vec& v) const {
    Vec r(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      if (u[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (v[static_cast<std::size_t>(j)] == 0) continue;
        Q c = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
        for (int k = 0; k < dim; ++k) r[static_cast<std::size_t>(k)] += c * bracket(i, j, k);
      }
    }
    return r;
  }
};

struct MockLieCoalgebra {
  int dim = 0;
  Tensor3 cobracket;  // dim x dim x dim, first leg is the input
};

struct Representation {
  int algebra_dim = 0;
  int space_dim = 0;
  std::vector<Matrix> action;  // one space_dim x space_dim matrix per algebra basis element

  // rho(x) for an algebra element in coordinates.
  Matrix of(const Vec& x) const {
    Matrix m(space_dim, space_dim);
    for (int i = 0; i < algebra_dim; ++i) {
      const Q& c = x[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      for (int a = 0; a < space_dim; ++a)
        for (int b = 0; b < space_dim; ++b) m(a, b) += c * action[static_cast<std::size_t>(i)](a, b);
    }
    return m;
  }
};

namespace detail {

inline void require_algebra(const MockLieAlgebra& a, const std::string& who) {
  if (a.bracket.dim1() != a.dim || a.bracket.dim2() != a.dim || a.bracket.dim3() != a.dim)
    throw DimensionError(who + ": bracket tensor is " + std::to_string(a.bracket.dim1()) + "x" +
                         std::to_string(a.bracket.dim2()) + "x" + std::to_string(a.bracket.dim3()) +
                         ", expected cube of side " + std::to_string(a.dim));
}

inline void require_coalgebra(const MockLieCoalgebra& c, const std::string& who) {
  if (c.cobracket.dim1() != c.dim || c.cobracket.dim2() != c.dim || c.cobracket.dim3() != c.dim)
    throw DimensionError(who + ": cobracket tensor is not a cube of side " + std::to_string(c.dim));
}

inline void require_square(const Matrix& m, int n, const std::string& who, const std::string& name) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionError(who + ": " + name + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                         std::to_string(n));
}

inline void require_rep(const MockLieAlgebra& a, const Representation& r, const std::string& who) {
  if (r.algebra_dim != a.dim)
    throw DimensionError(who + ": representation is over a dim-" + std::to_string(r.algebra_dim) +
                         " algebra, expected dim " + std::to_string(a.dim));
  if (static_cast<int>(r.action.size()) != a.dim)
    throw DimensionError(who + ": representation carries " + std::to_string(r.action.size()) +
                         " action matrices, expected " + std::to_string(a.dim));
  for (const Matrix& m : r.action) require_square(m, r.space_dim, who, "action matrix");
}

}  // namespace detail

// Commutativity entrywise, then the cyclic Jacobi identity on every basis
// triple. Jacobi witnesses carry the full cyclic sum as lhs against zero.
inline CheckReport check_mock_lie(const MockLieAlgebra& a) {
  detail::require_algebra(a, "check_mock_lie");
  ReportBuilder rb("mock-lie");
  const int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        rb.require({i, j, k}, {a.bracket(i, j, k)}, {a.bracket(j, i, k)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec sum(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m) {
          if (a.bracket(j, k, m) != 0) add_scaled(sum, a.bracket(j, k, m), a.bracket_basis(i, m));
          if (a.bracket(k, i, m) != 0) add_scaled(sum, a.bracket(k, i, m), a.bracket_basis(j, m));
          if (a.bracket(i, j, m) != 0) add_scaled(sum, a.bracket(i, j, m), a.bracket_basis(k, m));
        }
        rb.require_zero({i, j, k}, std::move(sum));
      }
  return rb.finish();
}

// Cocommutativity entrywise, then the three-term coassociativity-style sum
// per basis input, reported as one n^3 residual vector.
inline CheckReport check_mock_lie_coalgebra(const MockLieCoalgebra& c) {
  detail::require_coalgebra(c, "check_mock_lie_coalgebra");
  ReportBuilder rb("coalgebra");
  const int n = c.dim;
  const Tensor3& d = c.cobracket;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) rb.require({i, j, k}, {d(i, j, k)}, {d(i, k, j)});
  for (int i = 0; i < n; ++i) {
    Tensor3 t(n, n, n);
    for (int m = 0; m < n; ++m)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (d(m, p, q) == 0) continue;
          for (int a = 0; a < n; ++a) {
            // x1 (x) x2_1 (x) x2_2  +  x1_1 (x) x1_2 (x) x2  +  x2_1 (x) x1 (x) x2_2
            t(a, p, q) += d(i, a, m) * d(m, p, q);
            t(p, q, a) += d(i, m, a) * d(m, p, q);
            t(p, a, q) += d(i, a, m) * d(m, p, q);
          }
        }
    rb.require_zero({i}, t.flat());
  }
  return rb.finish();
}

// The coalgebra on the dual space whose pairing transposes the bracket:
// cobracket(k,i,j) = bracket(i,j,k).
inline MockLieCoalgebra dualize_algebra(const MockLieAlgebra& a) {
  detail::require_algebra(a, "dualize_algebra");
  MockLieCoalgebra c{a.dim, Tensor3(a.dim, a.dim, a.dim)};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) c.cobracket(k, i, j) = a.bracket(i, j, k);
  return c;
}

inline MockLieAlgebra dualize_coalgebra(const MockLieCoalgebra& c) {
  detail::require_coalgebra(c, "dualize_coalgebra");
  MockLieAlgebra a{c.dim, Tensor3(c.dim, c.dim, c.dim)};
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j)
      for (int k = 0; k < c.dim; ++k) a.bracket(i, j, k) = c.cobracket(k, i, j);
  return a;
}

// rho([x,y]) = -rho(x)rho(y) - rho(y)rho(x) on every basis pair; witnesses
// carry both sides as flattened matrices.
inline CheckReport check_representation(const MockLieAlgebra& a, const Representation& r) {
  detail::require_algebra(a, "check_representation");
  detail::require_rep(a, r, "check_representation");
  ReportBuilder rb("representation");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Matrix lhs(r.space_dim, r.space_dim);
      for (int k = 0; k < a.dim; ++k) {
        const Q& c = a.bracket(i, j, k);
        if (c == 0) continue;
        lhs = lhs + c * r.action[static_cast<std::size_t>(k)];
      }
      Matrix rhs = Q(-1) * (r.action[static_cast<std::size_t>(i)] * r.action[static_cast<std::size_t>(j)] +
                            r.action[static_cast<std::size_t>(j)] * r.action[static_cast<std::size_t>(i)]);
      rb.require({i, j}, lhs.flat(), rhs.flat());
    }
  return rb.finish();
}

// ad(e_i) with entry (k,j) = bracket(i,j,k).
inline Representation adjoint_rep(const MockLieAlgebra& a) {
  detail::require_algebra(a, "adjoint_rep");
  Representation r{a.dim, a.dim, {}};
  r.action.reserve(static_cast<std::size_t>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    Matrix m(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) m(k, j) = a.bracket(i, j, k);
    r.action.push_back(std::move(m));
  }
  return r;
}

// Dual module action: <rho*(x)u, v> = <u, rho(x)v>, i.e. plain transposes
// (no sign, unlike the anticommutative case).
inline Representation dual_rep(const Representation& r) {
  Representation d{r.algebra_dim, r.space_dim, {}};
  d.action.reserve(r.action.size());
  for (const Matrix& m : r.action) d.action.push_back(m.transpose());
  return d;
}

// Semidirect sum on A (+) V: [x+u, y+v] = [x,y] + rho(x)v + rho(y)u.
// Algebra coordinates come first in the combined basis.
inline MockLieAlgebra semidirect_product(const MockLieAlgebra& a, const Representation& r) {
  detail::require_algebra(a, "semidirect_product");
  detail::require_rep(a, r, "semidirect_product");
  if (CheckReport axiom = check_representation(a, r); !axiom.pass)
    throw HypothesisError("semidirect_product", std::move(axiom));
  const int n = a.dim, m = r.space_dim, total = n + m;
  MockLieAlgebra s{total, Tensor3(total, total, total)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s.bracket(i, j, k) = a.bracket(i, j, k);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const Q& v = r.action[static_cast<std::size_t>(i)](c, b);
        s.bracket(i, n + b, n + c) = v;
        s.bracket(n + b, i, n + c) = v;
      }
  return s;
}

struct FormFlags {
  bool skew = false;
  bool invariant = false;
  bool nondegenerate = false;
};

// Flagged checks on a bilinear form. Skewness and the associativity-style
// invariance B([x,y],z) = B(x,[y,z]) are entrywise scalar witnesses; a
// degenerate form yields one witness whose lhs is a kernel vector.
inline CheckReport check_form(const MockLieAlgebra& a, const Matrix& gram, FormFlags flags) {
  detail::require_algebra(a, "check_form");
  detail::require_square(gram, a.dim, "check_form", "gram matrix");
  ReportBuilder rb("form");
  const int n = a.dim;
  if (flags.skew)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rb.require({i, j}, {gram(i, j)}, {-gram(j, i)});
  if (flags.invariant)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Q lhs = 0, rhs = 0;
          for (int m = 0; m < n; ++m) {
            lhs += a.bracket(i, j, m) * gram(m, k);
            rhs += a.bracket(j, k, m) * gram(i, m);
          }
          rb.require({i, j, k}, {lhs}, {rhs});
        }
  if (flags.nondegenerate) {
    if (auto v = kernel_vector(gram)) rb.require_raw({}, *v, zero_vec(n));
  }
  return rb.finish();
}

// phi intertwines two modules of the same algebra: phi rho1(e_i) = rho2(e_i) phi.
inline CheckReport check_rep_morphism(const MockLieAlgebra& a, const Representation& r1,
                                      const Representation& r2, const Matrix& phi) {
  detail::require_rep(a, r1, "check_rep_morphism");
  detail::require_rep(a, r2, "check_rep_morphism");
  if (phi.rows() != r2.space_dim || phi.cols() != r1.space_dim)
    throw DimensionError("check_rep_morphism: phi is " + std::to_string(phi.rows()) + "x" +
                         std::to_string(phi.cols()) + ", expected " + std::to_string(r2.space_dim) +
                         "x" + std::to_string(r1.space_dim));
  ReportBuilder rb("rep-morphism");
  for (int i = 0; i < a.dim; ++i)
    rb.require({i}, (phi * r1.action[static_cast<std::size_t>(i)]).flat(),
               (r2.action[static_cast<std::size_t>(i)] * phi).flat());
  return rb.finish();
}

}  // namespace mlk
