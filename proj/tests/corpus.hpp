#pragma once

// Shared exact fixtures for the test suites: a four-dimensional algebra with
// known Nijenhuis data, the tensors derived from it, and deterministic
// generators for randomized property checks.

#include <array>
#include <cstdint>
#include <random>

#include "mlk/mlk.hpp"

namespace corpus {

using mlk::Matrix;
using mlk::MockLieAlgebra;
using mlk::MockLieCoalgebra;
using mlk::Q;
using mlk::Tensor3;

// Four-dimensional algebra: [e1,e1] = e2, [e1,e3] = [e3,e1] = e4.
inline MockLieAlgebra algebra_a() {
  MockLieAlgebra a{4, Tensor3(4, 4, 4)};
  a.bracket(0, 0, 1) = 1;
  a.bracket(0, 2, 3) = 1;
  a.bracket(2, 0, 3) = 1;
  return a;
}

// The standard antisymmetric tensor e2 (x) e3 - e3 (x) e2 on algebra_a.
inline Matrix r_standard() {
  Matrix r(4, 4);
  r(1, 2) = 1;
  r(2, 1) = -1;
  return r;
}

// Cobracket induced by r_standard: D(e1) = -e4 (x) e2 - e2 (x) e4.
inline MockLieCoalgebra delta_expected() {
  MockLieCoalgebra c{4, Tensor3(4, 4, 4)};
  c.cobracket(0, 3, 1) = -1;
  c.cobracket(0, 1, 3) = -1;
  return c;
}

// Skew invariant two-parameter form on algebra_a:
// w(e1,e3) = L, w(e1,e4) = G, w(e2,e3) = 2G.
inline Matrix omega_family(const Q& l, const Q& g) {
  Matrix w(4, 4);
  w(0, 2) = l;
  w(2, 0) = -l;
  w(0, 3) = g;
  w(3, 0) = -g;
  w(1, 2) = 2 * g;
  w(2, 1) = -2 * g;
  return w;
}

// One-parameter reduction of omega_family with the e4 column removed.
inline Matrix omega_reduced(const Q& l) { return omega_family(l, 0); }

// Operator produced by pairing omega_reduced(l) with r_standard: N(e1) = -l e2.
inline Matrix n_from_pairing(const Q& l) {
  Matrix n(4, 4);
  n(1, 0) = -l;
  return n;
}

// Operator on algebra_a: identity plus e2 -> e2 + e3.
inline Matrix n_shift() {
  Matrix n = Matrix::identity(4);
  n(2, 1) = 1;
  return n;
}

// Two-parameter coalgebra operator paired with n_shift.
inline Matrix s_shift(const Q& l, const Q& g) {
  Matrix s(4, 4);
  s(0, 0) = 1;
  s(2, 0) = l;
  s(3, 0) = g;
  s(1, 1) = 1;
  s(2, 1) = -1;
  s(2, 2) = 1;
  s(3, 3) = 1;
  return s;
}

// Symmetric invariant nondegenerate pairing on algebra_a (antidiagonal ones).
inline Matrix invariant_form() {
  Matrix g(4, 4);
  g(0, 3) = 1;
  g(1, 2) = 1;
  g(2, 1) = 1;
  g(3, 0) = 1;
  return g;
}

// Parameter grids used across suites: three points per parameter.
inline const std::array<Q, 3> lambda_grid{Q(0), Q(1), Q(-3)};
inline const std::array<Q, 3> gamma_grid{Q(0), Q(2), Q(5)};

// --- deterministic randomness -------------------------------------------------

inline std::mt19937_64 seeded(std::uint64_t seed) { return std::mt19937_64{seed}; }

// Small rational drawn from a fixed pool; biased toward zero for sparsity.
inline Q small_q(std::mt19937_64& gen) {
  static const std::array<Q, 12> pool = {Q(0),     Q(0),      Q(0),  Q(1),
                                         Q(-1),    Q(2),      Q(-2), Q(1) / 2,
                                         Q(-1) / 2, Q(3),     Q(1) / 3, Q(-3)};
  return pool[gen() % pool.size()];
}

inline Matrix random_matrix(std::mt19937_64& gen, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = small_q(gen);
  return m;
}

inline Matrix random_antisymmetric(std::mt19937_64& gen, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = small_q(gen);
      m(j, i) = -m(i, j);
    }
  return m;
}

// Sparse antisymmetric matrix with entries drawn from {-1, 0, 1, 2}.
inline Matrix sparse_antisymmetric(std::mt19937_64& gen, int n) {
  static const std::array<Q, 8> pool = {Q(0), Q(0), Q(0), Q(0),
                                        Q(-1), Q(1), Q(2), Q(0)};
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = pool[gen() % pool.size()];
      m(j, i) = -m(i, j);
    }
  return m;
}

inline Tensor3 random_symmetric_tensor(std::mt19937_64& gen, int n) {
  Tensor3 t(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t(i, j, k) = small_q(gen);
        t(j, i, k) = t(i, j, k);
      }
  return t;
}

}  // namespace corpus
