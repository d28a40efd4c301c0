#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qha/cyclotomic.hpp"

namespace qha {

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Dense tensor of order k over a commutative coefficient ring R (the exact
/// cyclotomic scalars in the concrete case, multivariate polynomials in the
/// symbolic case).  Storage is row-major: the leftmost index is the major
/// one.  All dimensions in this project are tiny (<= 6 per leg, <= 6 legs),
/// so dense storage plus zero-skipping iteration is the right trade-off.
template <class R>
class TensorT {
 public:
  TensorT() : dims_{}, data_{} {}
  explicit TensorT(std::vector<int> dims)
      : dims_(std::move(dims)),
        data_((size_t)std::accumulate(dims_.begin(), dims_.end(), 1LL, std::multiplies<long long>()),
              R()) {}

  static TensorT scalar(const R& v) {
    TensorT t(std::vector<int>{1});
    t.data_[0] = v;
    return t;
  }

  int order() const { return (int)dims_.size(); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int leg) const { return dims_[leg]; }
  size_t size() const { return data_.size(); }

  const R& operator[](size_t flat) const { return data_[flat]; }
  R& operator[](size_t flat) { return data_[flat]; }

  const R& at(std::initializer_list<int> idx) const { return data_[flatten(idx)]; }
  R& at(std::initializer_list<int> idx) { return data_[flatten(idx)]; }

  size_t flatten(std::initializer_list<int> idx) const {
    if ((int)idx.size() != order()) throw ShapeMismatch("index order mismatch");
    size_t f = 0;
    int leg = 0;
    for (int i : idx) {
      f = f * dims_[leg] + (size_t)i;
      ++leg;
    }
    return f;
  }
  size_t flatten(const std::vector<int>& idx) const {
    size_t f = 0;
    for (int leg = 0; leg < order(); ++leg) f = f * dims_[leg] + (size_t)idx[leg];
    return f;
  }
  std::vector<int> unflatten(size_t flat) const {
    std::vector<int> idx(order());
    for (int leg = order() - 1; leg >= 0; --leg) {
      idx[leg] = (int)(flat % dims_[leg]);
      flat /= dims_[leg];
    }
    return idx;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool operator==(const TensorT& o) const { return dims_ == o.dims_ && data_ == o.data_; }
  bool operator!=(const TensorT& o) const { return !(*this == o); }

  TensorT operator+(const TensorT& o) const {
    check_same_shape(o);
    TensorT r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  TensorT operator-(const TensorT& o) const {
    check_same_shape(o);
    TensorT r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }
  TensorT operator-() const {
    TensorT r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
  }
  TensorT operator*(const R& s) const {
    TensorT r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
  }
  TensorT& operator+=(const TensorT& o) { return *this = *this + o; }
  TensorT& operator-=(const TensorT& o) { return *this = *this - o; }

  /// Tensor (Kronecker) product; dims concatenate.
  TensorT kron(const TensorT& o) const {
    std::vector<int> nd = dims_;
    nd.insert(nd.end(), o.dims_.begin(), o.dims_.end());
    TensorT r(nd);
    size_t on = o.data_.size();
    for (size_t i = 0; i < data_.size(); ++i) {
      if (data_[i].is_zero()) continue;
      for (size_t j = 0; j < on; ++j) {
        if (o.data_[j].is_zero()) continue;
        r.data_[i * on + j] = data_[i] * o.data_[j];
      }
    }
    return r;
  }

  /// Applies a linear map (matrix m with dims (out, in)) to one leg.
  TensorT apply_to_leg(const TensorT& m, int leg) const {
    if (m.order() != 2) throw ShapeMismatch("apply_to_leg expects an order-2 map");
    if (m.dim(1) != dims_[leg]) throw ShapeMismatch("map input dim mismatch");
    std::vector<int> nd = dims_;
    nd[leg] = m.dim(0);
    TensorT r(nd);
    size_t inner = 1;
    for (int t = leg + 1; t < order(); ++t) inner *= (size_t)dims_[t];
    size_t outer = data_.size() / (inner * (size_t)dims_[leg]);
    for (size_t a = 0; a < outer; ++a) {
      for (int i = 0; i < dims_[leg]; ++i) {
        size_t base = (a * (size_t)dims_[leg] + (size_t)i) * inner;
        for (size_t b = 0; b < inner; ++b) {
          const R& v = data_[base + b];
          if (v.is_zero()) continue;
          for (int j = 0; j < m.dim(0); ++j) {
            const R& mv = m.data_[(size_t)j * (size_t)m.dim(1) + (size_t)i];
            if (mv.is_zero()) continue;
            r.data_[(a * (size_t)m.dim(0) + (size_t)j) * inner + b] += mv * v;
          }
        }
      }
    }
    return r;
  }

  /// Replaces one leg of dimension n by two legs given a splitting map
  /// s with dims (n1, n2, n): leg value e_i -> sum s[j1][j2][i] e_j1 x e_j2.
  TensorT split_leg(const TensorT& s, int leg) const {
    if (s.order() != 3) throw ShapeMismatch("split_leg expects an order-3 map");
    if (s.dim(2) != dims_[leg]) throw ShapeMismatch("split map input dim mismatch");
    std::vector<int> nd;
    nd.insert(nd.end(), dims_.begin(), dims_.begin() + leg);
    nd.push_back(s.dim(0));
    nd.push_back(s.dim(1));
    nd.insert(nd.end(), dims_.begin() + leg + 1, dims_.end());
    TensorT r(nd);
    size_t inner = 1;
    for (int t = leg + 1; t < order(); ++t) inner *= (size_t)dims_[t];
    size_t outer = data_.size() / (inner * (size_t)dims_[leg]);
    size_t pair = (size_t)s.dim(0) * (size_t)s.dim(1);
    for (size_t a = 0; a < outer; ++a)
      for (int i = 0; i < dims_[leg]; ++i) {
        size_t base = (a * (size_t)dims_[leg] + (size_t)i) * inner;
        for (size_t b = 0; b < inner; ++b) {
          const R& v = data_[base + b];
          if (v.is_zero()) continue;
          for (size_t p = 0; p < pair; ++p) {
            const R& sv = s.data_[p * (size_t)s.dim(2) + (size_t)i];
            if (sv.is_zero()) continue;
            r.data_[(a * pair + p) * inner + b] += sv * v;
          }
        }
      }
    return r;
  }

  /// Contracts one leg against a functional f (dims (n)): e_i -> f[i].
  TensorT contract_leg(const TensorT& f, int leg) const {
    if (f.order() != 1 || f.dim(0) != dims_[leg]) throw ShapeMismatch("functional dim mismatch");
    std::vector<int> nd;
    for (int t = 0; t < order(); ++t)
      if (t != leg) nd.push_back(dims_[t]);
    if (nd.empty()) nd.push_back(1);
    bool to_scalar = nd.size() == 1 && order() == 1;
    TensorT r(nd);
    size_t inner = 1;
    for (int t = leg + 1; t < order(); ++t) inner *= (size_t)dims_[t];
    size_t outer = data_.size() / (inner * (size_t)dims_[leg]);
    for (size_t a = 0; a < outer; ++a)
      for (int i = 0; i < dims_[leg]; ++i) {
        if (f.data_[i].is_zero()) continue;
        size_t base = (a * (size_t)dims_[leg] + (size_t)i) * inner;
        for (size_t b = 0; b < inner; ++b) {
          const R& v = data_[base + b];
          if (v.is_zero()) continue;
          r.data_[to_scalar ? 0 : a * inner + b] += f.data_[i] * v;
        }
      }
    return r;
  }

  const std::vector<R>& data() const { return data_; }
  std::vector<R>& data() { return data_; }

 private:
  void check_same_shape(const TensorT& o) const {
    if (dims_ != o.dims_) throw ShapeMismatch("tensor shape mismatch");
  }

  std::vector<int> dims_;
  std::vector<R> data_;
};

using Tensor = TensorT<Cyc>;

inline Tensor identity_matrix(int n) {
  Tensor m(std::vector<int>{n, n});
  for (int i = 0; i < n; ++i) m.at({i, i}) = Cyc::one();
  return m;
}

inline Tensor basis_vector(int n, int i) {
  Tensor v(std::vector<int>{n});
  v.at({i}) = Cyc::one();
  return v;
}

/// Result of an exact affine solve A x = b.
struct LinearSolution {
  std::optional<Tensor> particular;  // none when infeasible
  std::vector<Tensor> kernel_basis;  // reduced echelon form, canonical
  bool feasible() const { return particular.has_value(); }
};

namespace linalg {

/// In-place reduced row echelon form; returns pivot column per row.
/// Column order is left to right, pivots normalized to 1.
inline std::vector<int> rref(std::vector<std::vector<Cyc>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    // Prefer a rational pivot when available: keeps numbers small.
    for (size_t k = sel; k < rows; ++k)
      if (!m[k][c].is_zero() && m[k][c].is_rational()) {
        sel = k;
        break;
      }
    if (sel == rows || m[sel][c].is_zero()) continue;
    std::swap(m[r], m[sel]);
    Cyc inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyc f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

}  // namespace linalg

/// Exact Gaussian elimination over Q(zeta_L).  Returns the full affine
/// solution set: a particular solution (free variables set to zero, which is
/// the canonical echelon representative) and a kernel basis in reduced
/// echelon form.
inline LinearSolution solve_linear(const Tensor& A, const Tensor& b) {
  if (A.order() != 2 || b.order() != 1) throw ShapeMismatch("solve_linear expects matrix and vector");
  int m = A.dim(0), n = A.dim(1);
  if (b.dim(0) != m) throw ShapeMismatch("solve_linear rhs length mismatch");
  std::vector<std::vector<Cyc>> aug(m, std::vector<Cyc>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = A.at({i, j});
    aug[i][n] = b.at({i});
  }
  std::vector<int> pivots = linalg::rref(aug);
  LinearSolution sol;
  // Infeasible iff a pivot lands in the rhs column.
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == n) return sol;
  Tensor part(std::vector<int>{n});
  for (size_t r = 0; r < pivots.size(); ++r) part.at({pivots[r]}) = aug[r][n];
  sol.particular = part;
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Tensor v(std::vector<int>{n});
    v.at({c}) = Cyc::one();
    for (size_t r = 0; r < pivots.size(); ++r) v.at({pivots[r]}) = -aug[r][c];
    sol.kernel_basis.push_back(v);
  }
  return sol;
}

/// Exact matrix inverse; std::nullopt when singular.
inline std::optional<Tensor> matrix_inverse(const Tensor& A) {
  if (A.order() != 2 || A.dim(0) != A.dim(1)) throw ShapeMismatch("matrix_inverse expects square matrix");
  int n = A.dim(0);
  std::vector<std::vector<Cyc>> aug(n, std::vector<Cyc>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = A.at({i, j});
    aug[i][n + i] = Cyc::one();
  }
  std::vector<int> pivots = linalg::rref(aug);
  if ((int)pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Tensor inv(std::vector<int>{n, n});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at({i, j}) = aug[i][n + j];
  return inv;
}

/// Echelonized span with exact membership tests.
class Subspace {
 public:
  Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return (int)rows_.size(); }
  const std::vector<std::vector<Cyc>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  static Subspace from_vectors(int ambient_dim, const std::vector<Tensor>& vecs) {
    Subspace s(ambient_dim);
    std::vector<std::vector<Cyc>> m;
    for (const auto& v : vecs) {
      std::vector<Cyc> row(ambient_dim);
      for (int i = 0; i < ambient_dim; ++i) row[i] = v.at({i});
      m.push_back(std::move(row));
    }
    s.pivots_ = linalg::rref(m);
    s.rows_ = std::move(m);
    return s;
  }

  bool contains(const Tensor& v) const {
    std::vector<Cyc> w(ambient_);
    for (int i = 0; i < ambient_; ++i) w[i] = v.at({i});
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Cyc& f = w[pivots_[r]];
      if (f.is_zero()) continue;
      Cyc c = f;
      for (int i = 0; i < ambient_; ++i) w[i] -= c * rows_[r][i];
    }
    for (const auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  }

  std::vector<Tensor> basis() const {
    std::vector<Tensor> out;
    for (const auto& row : rows_) {
      Tensor v(std::vector<int>{ambient_});
      for (int i = 0; i < ambient_; ++i) v.at({i}) = row[i];
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  int ambient_;
  std::vector<std::vector<Cyc>> rows_;
  std::vector<int> pivots_;
};

}  // namespace qha
