#pragma once

#include "morseflow/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace morseflow {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (auto v : r) data_.emplace_back(v);
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& s = (*this)(src, j);
      if (!s.is_zero()) (*this)(dst, j) += factor * s;
    }
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& s = (*this)(i, src);
      if (!s.is_zero()) (*this)(i, dst) += factor * s;
    }
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;

  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, r = rank.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (!D(i, i).is_zero()) out.push_back(D(i, i));
    return out;
  }
  std::size_t rank() const { return invariant_factors().size(); }
};

namespace detail {

// Reduces `a` in place to Smith form. Row operations are mirrored on `u`,
// column operations on `v`, when those are non-null. Each pivot is the
// nonzero entry of least absolute value in the remaining block; its row and
// column are cleared by Euclidean steps, and an entry not divisible by the
// pivot is folded into the pivot row so the next round shrinks the pivot.
inline void smith_reduce(IntegerMatrix& a, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto swap_r = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (v) v->swap_cols(x, y);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    if (u) u->add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    if (v) v->add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < m && !(found && best == 1); ++i)
      for (std::size_t j = t; j < n; ++j) {
        const auto& x = a(i, j);
        if (x.is_zero()) continue;
        Integer ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = std::move(ax);
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (!found) break;
    swap_r(t, pi);
    swap_c(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        Integer q = a(i, t) / a(t, t);
        if (!q.is_zero()) row_op(i, t, -q);
        if (!a(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        Integer q = a(t, j) / a(t, t);
        if (!q.is_zero()) col_op(j, t, -q);
        if (!a(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t bi = t, bj = t;
        Integer b = abs(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (!a(i, t).is_zero() && abs(a(i, t)) < b) {
            b = abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a(t, j).is_zero() && abs(a(t, j)) < b) {
            b = abs(a(t, j));
            bi = t;
            bj = j;
          }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      bool folded = false;
      if (abs(a(t, t)) != 1) {
        for (std::size_t i = t + 1; i < m && !folded; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (!a(i, j).is_zero() && a(i, j) % a(t, t) != 0) {
              row_op(t, i, Integer(1));
              folded = true;
              break;
            }
      }
      if (!folded) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

} // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& a) {
  SmithForm f{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
  detail::smith_reduce(f.D, &f.U, &f.V);
  return f;
}

/// Invariant factors only; skips accumulating U and V.
inline std::vector<Integer> smith_invariant_factors(IntegerMatrix a) {
  detail::smith_reduce(a, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (!a(i, i).is_zero()) out.push_back(a(i, i));
  return out;
}

} // namespace morseflow
