#pragma once

// Dense exact-rational containers sized for structure-constant work: vectors,
// matrices, cubic tensors, and a small general tensor used by the generic
// contraction. Dimensions here are single digits in practice, so everything
// is a flat std::vector<Q> with row-major indexing and no cleverness.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlk/errors.hpp"
#include "mlk/rational.hpp"

namespace mlk {

using Vec = std::vector<Q>;

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return q == 0; });
}

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

inline Vec unit_vec(int n, int i) {
  Vec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector add: lengths differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sub: lengths differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scaled(const Q& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline void add_scaled(Vec& acc, const Q& c, const Vec& a) {
  if (acc.size() != a.size()) throw DimensionError("vector axpy: lengths differ");
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] += c * a[i];
}

// Column-action matrix: (M v)_i = sum_j M(i,j) v_j; column j is the image of
// the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix: negative dimension");
  }
  Matrix(int rows, int cols, std::initializer_list<Q> entries) : Matrix(rows, cols) {
    if (entries.size() != a_.size()) throw DimensionError("matrix: initializer size mismatch");
    std::copy(entries.begin(), entries.end(), a_.begin());
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Q& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Q& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Q& q) { return q == 0; });
  }

  Vec col(int j) const {
    Vec v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
  }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw DimensionError("matrix apply: expected length " + std::to_string(cols_) + ", got " +
                           std::to_string(v.size()));
    Vec r(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      Q acc = 0;
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i)] = acc;
    }
    return r;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Flattened row-major copy of the entries; used when a whole matrix is a
  // witness value.
  Vec flat() const { return a_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Q> a_;
};

inline Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionError("matrix add: shape mismatch");
  Matrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionError("matrix sub: shape mismatch");
  Matrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows())
    throw DimensionError("matrix product: inner dimensions " + std::to_string(x.cols()) + " vs " +
                         std::to_string(y.rows()));
  Matrix r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

inline Matrix operator*(const Q& c, const Matrix& x) {
  Matrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = c * x(i, j);
  return r;
}

inline Matrix block_diag(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows() + y.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) r(x.rows() + i, x.cols() + j) = y(i, j);
  return r;
}

// The tensor-flip that swaps the two legs of an element of A (x) A. For the
// coefficient grid this is exactly the transpose.
inline Matrix flip_tau(const Matrix& r) {
  if (r.rows() != r.cols()) throw DimensionError("flip_tau: grid must be square");
  return r.transpose();
}

// Cubic array t(i,j,k); the workhorse for structure constants (bracket,
// cobracket, bilinear cochains).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int n1, int n2, int n3)
      : n1_(n1), n2_(n2), n3_(n3), a_(static_cast<std::size_t>(n1) * n2 * n3) {
    if (n1 < 0 || n2 < 0 || n3 < 0) throw DimensionError("tensor3: negative dimension");
  }

  int dim1() const { return n1_; }
  int dim2() const { return n2_; }
  int dim3() const { return n3_; }

  Q& operator()(int i, int j, int k) {
    return a_[(static_cast<std::size_t>(i) * n2_ + j) * n3_ + k];
  }
  const Q& operator()(int i, int j, int k) const {
    return a_[(static_cast<std::size_t>(i) * n2_ + j) * n3_ + k];
  }

  bool operator==(const Tensor3& o) const = default;

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Q& q) { return q == 0; });
  }

  Vec flat() const { return a_; }

 private:
  int n1_ = 0, n2_ = 0, n3_ = 0;
  std::vector<Q> a_;
};

inline Tensor3 operator+(const Tensor3& x, const Tensor3& y) {
  if (x.dim1() != y.dim1() || x.dim2() != y.dim2() || x.dim3() != y.dim3())
    throw DimensionError("tensor3 add: shape mismatch");
  Tensor3 r(x.dim1(), x.dim2(), x.dim3());
  for (int i = 0; i < x.dim1(); ++i)
    for (int j = 0; j < x.dim2(); ++j)
      for (int k = 0; k < x.dim3(); ++k) r(i, j, k) = x(i, j, k) + y(i, j, k);
  return r;
}

inline Tensor3 operator-(const Tensor3& x, const Tensor3& y) {
  if (x.dim1() != y.dim1() || x.dim2() != y.dim2() || x.dim3() != y.dim3())
    throw DimensionError("tensor3 sub: shape mismatch");
  Tensor3 r(x.dim1(), x.dim2(), x.dim3());
  for (int i = 0; i < x.dim1(); ++i)
    for (int j = 0; j < x.dim2(); ++j)
      for (int k = 0; k < x.dim3(); ++k) r(i, j, k) = x(i, j, k) - y(i, j, k);
  return r;
}

// General dense tensor of rank 0..4. Exists to host the generic contraction;
// the domain code sticks to Vec/Matrix/Tensor3 and converts at the edges.
class Tensor {
 public:
  Tensor() : dims_{}, a_(1) {}
  explicit Tensor(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.size() > 4) throw DimensionError("tensor: rank above 4 not supported");
    std::size_t total = 1;
    for (int d : dims_) {
      if (d <= 0) throw DimensionError("tensor: nonpositive dimension");
      total *= static_cast<std::size_t>(d);
    }
    a_.assign(total, Q(0));
  }

  static Tensor from(const Vec& v) {
    Tensor t(std::vector<int>{static_cast<int>(v.size())});
    t.a_ = v;
    return t;
  }
  static Tensor from(const Matrix& m) {
    Tensor t(std::vector<int>{m.rows(), m.cols()});
    t.a_ = m.flat();
    return t;
  }
  static Tensor from(const Tensor3& c) {
    Tensor t(std::vector<int>{c.dim1(), c.dim2(), c.dim3()});
    t.a_ = c.flat();
    return t;
  }

  int rank() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }

  Q& at(const std::vector<int>& idx) { return a_[offset(idx)]; }
  const Q& at(const std::vector<int>& idx) const { return a_[offset(idx)]; }

  bool operator==(const Tensor& o) const = default;

  Vec to_vec() const {
    if (rank() != 1) throw DimensionError("tensor: not rank 1");
    return a_;
  }
  Matrix to_matrix() const {
    if (rank() != 2) throw DimensionError("tensor: not rank 2");
    Matrix m(dims_[0], dims_[1]);
    for (int i = 0; i < dims_[0]; ++i)
      for (int j = 0; j < dims_[1]; ++j) m(i, j) = at({i, j});
    return m;
  }
  Tensor3 to_tensor3() const {
    if (rank() != 3) throw DimensionError("tensor: not rank 3");
    Tensor3 c(dims_[0], dims_[1], dims_[2]);
    for (int i = 0; i < dims_[0]; ++i)
      for (int j = 0; j < dims_[1]; ++j)
        for (int k = 0; k < dims_[2]; ++k) c(i, j, k) = at({i, j, k});
    return c;
  }
  Q to_scalar() const {
    if (rank() != 0) throw DimensionError("tensor: not rank 0");
    return a_[0];
  }

 private:
  std::size_t offset(const std::vector<int>& idx) const {
    if (idx.size() != dims_.size()) throw DimensionError("tensor: index rank mismatch");
    std::size_t off = 0;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
      if (idx[d] < 0 || idx[d] >= dims_[d]) throw DimensionError("tensor: index out of range");
      off = off * static_cast<std::size_t>(dims_[d]) + static_cast<std::size_t>(idx[d]);
    }
    return off;
  }

  std::vector<int> dims_;
  std::vector<Q> a_;
};

// Sums t and u over the given (t-axis, u-axis) pairs. Free axes of t come
// first in the result, then free axes of u, each in original order.
inline Tensor contract(const Tensor& t, const Tensor& u,
                       const std::vector<std::pair<int, int>>& axes) {
  std::vector<bool> t_used(t.dims().size(), false), u_used(u.dims().size(), false);
  for (auto [ta, ua] : axes) {
    if (ta < 0 || ta >= t.rank())
      throw DimensionError("contract: left axis " + std::to_string(ta) + " out of range for rank " +
                           std::to_string(t.rank()));
    if (ua < 0 || ua >= u.rank())
      throw DimensionError("contract: right axis " + std::to_string(ua) + " out of range for rank " +
                           std::to_string(u.rank()));
    if (t_used[ta] || u_used[ua]) throw DimensionError("contract: axis used twice");
    if (t.dims()[ta] != u.dims()[ua])
      throw DimensionError("contract: left axis " + std::to_string(ta) + " (length " +
                           std::to_string(t.dims()[ta]) + ") vs right axis " + std::to_string(ua) +
                           " (length " + std::to_string(u.dims()[ua]) + ")");
    t_used[ta] = u_used[ua] = true;
  }

  std::vector<int> t_free, u_free, out_dims;
  for (int d = 0; d < t.rank(); ++d)
    if (!t_used[d]) {
      t_free.push_back(d);
      out_dims.push_back(t.dims()[d]);
    }
  for (int d = 0; d < u.rank(); ++d)
    if (!u_used[d]) {
      u_free.push_back(d);
      out_dims.push_back(u.dims()[d]);
    }
  if (out_dims.size() > 4) throw DimensionError("contract: result rank above 4");

  Tensor out(out_dims.empty() ? Tensor() : Tensor(out_dims));

  std::vector<int> out_idx(out_dims.size(), 0), sum_idx(axes.size(), 0);
  std::vector<int> ti(t.rank(), 0), ui(u.rank(), 0);
  auto advance = [](std::vector<int>& idx, const std::vector<int>& bounds) {
    for (int d = static_cast<int>(idx.size()) - 1; d >= 0; --d) {
      if (++idx[static_cast<std::size_t>(d)] < bounds[static_cast<std::size_t>(d)]) return true;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    return false;
  };
  std::vector<int> sum_bounds;
  sum_bounds.reserve(axes.size());
  for (auto [ta, ua] : axes) sum_bounds.push_back(t.dims()[ta]);

  do {
    Q acc = 0;
    std::fill(sum_idx.begin(), sum_idx.end(), 0);
    do {
      for (std::size_t d = 0; d < t_free.size(); ++d) ti[static_cast<std::size_t>(t_free[d])] = out_idx[d];
      for (std::size_t d = 0; d < u_free.size(); ++d)
        ui[static_cast<std::size_t>(u_free[d])] = out_idx[t_free.size() + d];
      for (std::size_t d = 0; d < axes.size(); ++d) {
        ti[static_cast<std::size_t>(axes[d].first)] = sum_idx[d];
        ui[static_cast<std::size_t>(axes[d].second)] = sum_idx[d];
      }
      acc += t.at(ti) * u.at(ui);
    } while (advance(sum_idx, sum_bounds));
    out.at(out_idx) = acc;
  } while (advance(out_idx, out_dims));

  return out;
}

// Exact Gaussian elimination. solve_linear returns a particular solution of
// M x = rhs (free variables set to 0) when consistent, plus the rank of M.
struct LinearSolution {
  std::optional<Vec> x;
  int rank = 0;
};

namespace detail {

// Row-reduces [M | extra] in place; returns pivot column per row used.
inline std::vector<int> row_reduce(Matrix& m, Vec* rhs) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      if (rhs) std::swap((*rhs)[static_cast<std::size_t>(piv)], (*rhs)[static_cast<std::size_t>(row)]);
    }
    Q inv = Q(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    if (rhs) (*rhs)[static_cast<std::size_t>(row)] *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Q f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
      if (rhs) (*rhs)[static_cast<std::size_t>(i)] -= f * (*rhs)[static_cast<std::size_t>(row)];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace detail

inline LinearSolution solve_linear(Matrix m, Vec rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw DimensionError("solve_linear: rhs length " + std::to_string(rhs.size()) + " vs " +
                         std::to_string(m.rows()) + " rows");
  std::vector<int> pivots = detail::row_reduce(m, &rhs);
  int rank = static_cast<int>(pivots.size());
  for (int i = rank; i < m.rows(); ++i)
    if (rhs[static_cast<std::size_t>(i)] != 0) return {std::nullopt, rank};
  Vec x(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < rank; ++i) x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = rhs[static_cast<std::size_t>(i)];
  return {std::move(x), rank};
}

inline int rank_of(Matrix m) { return static_cast<int>(detail::row_reduce(m, nullptr).size()); }

// Basis of the null space, one vector per free column, in column order.
inline std::vector<Vec> kernel_basis(Matrix m) {
  std::vector<int> pivots = detail::row_reduce(m, nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Vec> kernel_vector(const Matrix& m) {
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

}  // namespace mlk
