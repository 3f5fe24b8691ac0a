#ifndef CYCHOM_SPARSE_HPP
#define CYCHOM_SPARSE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace cychom {

// Sparse vector: (index, value) pairs sorted by index, no zero values and no
// duplicate indices.  All helpers below preserve that invariant.
template <Field F>
using SparseVec = std::vector<std::pair<int, F>>;

template <Field F>
SparseVec<F> sparse_scale(const SparseVec<F>& v, const F& s) {
  SparseVec<F> out;
  if (is_zero(s)) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    F y = x * s;
    if (!is_zero(y)) out.emplace_back(i, y);
  }
  return out;
}

// a*u + b*v with merged indices.
template <Field F>
SparseVec<F> sparse_axpy(const F& a, const SparseVec<F>& u, const F& b,
                         const SparseVec<F>& v) {
  SparseVec<F> out;
  out.reserve(u.size() + v.size());
  size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j >= v.size() || (i < u.size() && u[i].first < v[j].first)) {
      F y = a * u[i].second;
      if (!is_zero(y)) out.emplace_back(u[i].first, y);
      ++i;
    } else if (i >= u.size() || v[j].first < u[i].first) {
      F y = b * v[j].second;
      if (!is_zero(y)) out.emplace_back(v[j].first, y);
      ++j;
    } else {
      F y = a * u[i].second + b * v[j].second;
      if (!is_zero(y)) out.emplace_back(u[i].first, y);
      ++i, ++j;
    }
  }
  return out;
}

template <Field F>
std::vector<F> sparse_to_dense(const SparseVec<F>& v, int n) {
  std::vector<F> out(static_cast<size_t>(n), F{0});
  for (const auto& [i, x] : v) out[static_cast<size_t>(i)] = x;
  return out;
}

template <Field F>
SparseVec<F> dense_to_sparse(const std::vector<F>& v) {
  SparseVec<F> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

/*
 * Column-major sparse matrix.  Built by add() in arbitrary order, then
 * finalize() sorts, merges duplicates and drops zeros; the accessors assume
 * a finalized matrix.  Column major fits the way boundary operators are
 * assembled (one column per basis tensor).
 */
template <Field F>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), col_(static_cast<size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const F& v) {
    if (is_zero(v)) return;
    col_[static_cast<size_t>(c)].emplace_back(r, v);
    dirty_ = true;
  }

  void set_column(int c, SparseVec<F> v) {
    col_[static_cast<size_t>(c)] = std::move(v);
  }

  void finalize() {
    for (auto& col : col_) {
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVec<F> merged;
      merged.reserve(col.size());
      for (auto& [i, x] : col) {
        if (!merged.empty() && merged.back().first == i)
          merged.back().second = merged.back().second + x;
        else
          merged.emplace_back(i, x);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [](const auto& p) { return is_zero(p.second); }),
                   merged.end());
      col = std::move(merged);
    }
    dirty_ = false;
  }

  const SparseVec<F>& column(int c) const { return col_[static_cast<size_t>(c)]; }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& col : col_) n += col.size();
    return n;
  }

  bool is_zero_matrix() const {
    for (const auto& col : col_)
      if (!col.empty()) return false;
    return true;
  }

  // Matrix times sparse coordinate vector: a linear combination of columns.
  SparseVec<F> apply(const SparseVec<F>& x) const {
    SparseVec<F> acc;
    for (const auto& [c, v] : x)
      acc = sparse_axpy(F{1}, acc, v, col_[static_cast<size_t>(c)]);
    return acc;
  }

  std::vector<F> apply_dense(const std::vector<F>& x) const {
    std::vector<F> out(static_cast<size_t>(rows_), F{0});
    for (int c = 0; c < cols_; ++c) {
      const F& v = x[static_cast<size_t>(c)];
      if (is_zero(v)) continue;
      for (const auto& [r, a] : col_[static_cast<size_t>(c)])
        out[static_cast<size_t>(r)] = out[static_cast<size_t>(r)] + a * v;
    }
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : col_[static_cast<size_t>(c)]) t.add(c, r, v);
    t.finalize();
    return t;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_)
      throw input_error("matrix product shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (int c = 0; c < b.cols_; ++c) out.set_column(c, a.apply(b.column(c)));
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw input_error("matrix sum shape mismatch");
    SparseMatrix out(a.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c)
      out.set_column(c, sparse_axpy(F{1}, a.column(c), F{1}, b.column(c)));
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw input_error("matrix difference shape mismatch");
    SparseMatrix out(a.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c)
      out.set_column(c, sparse_axpy(F{1}, a.column(c), F{-1}, b.column(c)));
    return out;
  }

  SparseMatrix operator*(const F& s) const {
    SparseMatrix out(rows_, cols_);
    for (int c = 0; c < cols_; ++c) out.set_column(c, sparse_scale(column(c), s));
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.col_ == b.col_;
  }

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.add(i, i, F{1});
    m.finalize();
    return m;
  }

  static SparseMatrix zero(int rows, int cols) { return SparseMatrix(rows, cols); }

  // Restriction to given row/column index subsets; positions keep the order
  // of the supplied lists.  Entries outside the row subset are dropped.
  SparseMatrix submatrix(const std::vector<int>& row_ids,
                         const std::vector<int>& col_ids) const {
    std::vector<int> row_pos(static_cast<size_t>(rows_), -1);
    for (size_t k = 0; k < row_ids.size(); ++k)
      row_pos[static_cast<size_t>(row_ids[k])] = static_cast<int>(k);
    SparseMatrix out(static_cast<int>(row_ids.size()),
                     static_cast<int>(col_ids.size()));
    for (size_t k = 0; k < col_ids.size(); ++k) {
      SparseVec<F> col;
      for (const auto& [r, v] : column(col_ids[k])) {
        int p = row_pos[static_cast<size_t>(r)];
        if (p >= 0) col.emplace_back(p, v);
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.set_column(static_cast<int>(k), std::move(col));
    }
    return out;
  }

  std::vector<SparseVec<F>> to_rows() const {
    std::vector<SparseVec<F>> rows(static_cast<size_t>(rows_));
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : col_[static_cast<size_t>(c)])
        rows[static_cast<size_t>(r)].emplace_back(c, v);
    return rows;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec<F>> col_;
  bool dirty_ = false;
};

} // namespace cychom

#endif
