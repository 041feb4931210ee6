#pragma once

// Exact linear algebra over any field type F with value semantics and an
// `is_zero(F)` overload. Dense containers are Eigen matrices; elimination is
// our own, since pivoting here is structural (first nonzero in scan order)
// rather than magnitude-based.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pbw/errors.hpp"

namespace pbw {

template <typename F>
concept ExactField = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

using Index = Eigen::Index;

template <typename F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <typename F>
using Vector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <typename F>
Matrix<F> zero_matrix(Index rows, Index cols) {
  Matrix<F> m(rows, cols);
  m.fill(F(0));
  return m;
}

template <typename F>
Vector<F> zero_vector(Index n) {
  Vector<F> v(n);
  v.fill(F(0));
  return v;
}

template <typename F>
Vector<F> unit_vector(Index n, Index i) {
  Vector<F> v = zero_vector<F>(n);
  v[i] = F(1);
  return v;
}

template <typename F>
Matrix<F> identity_matrix(Index n) {
  Matrix<F> m = zero_matrix<F>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Exact product; Eigen's GEMM path is avoided for non-POD scalars with
/// heavy zero fill, so this skips zero entries explicitly.
template <typename F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product inner dimensions differ");
  Matrix<F> out = zero_matrix<F>(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename F>
Vector<F> multiply(const Matrix<F>& a, const Vector<F>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector dimensions differ");
  Vector<F> out = zero_vector<F>(a.rows());
  for (Index k = 0; k < a.cols(); ++k) {
    if (is_zero(v[k])) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) out[i] += a(i, k) * v[k];
  }
  return out;
}

template <typename F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix<F> out(a.rows() + b.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) out.row(i) = a.row(i);
  for (Index i = 0; i < b.rows(); ++i) out.row(a.rows() + i) = b.row(i);
  return out;
}

template <typename F>
struct RrefResult {
  Index rank = 0;
  Matrix<F> reduced;
  std::vector<Index> pivot_cols;
};

/// Reduced row-echelon form. Pivot: first row (from the current one) with a
/// nonzero entry in the leftmost remaining column.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> res;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    F inv = F(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  res.reduced = std::move(m);
  return res;
}

template <ExactField F>
Index rank(const Matrix<F>& m) {
  return rref<F>(m).rank;
}

/// Subspace of F^n held as a pivot-canonical (RREF) row basis; equal
/// subspaces have identical stored bases.
template <ExactField F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `rows`.
  static Subspace span(const Matrix<F>& rows) {
    Subspace s(rows.cols());
    auto r = rref<F>(rows);
    s.basis_ = r.reduced.topRows(r.rank);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
  }

  static Subspace span(const std::vector<Vector<F>>& vectors, Index ambient) {
    Matrix<F> rows = zero_matrix<F>(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw AmbientMismatch("spanning vector has wrong length");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span(rows);
  }

  static Subspace whole(Index ambient) { return span(identity_matrix<F>(ambient)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix<F>& basis() const { return basis_; }
  Vector<F> basis_vector(Index i) const { return basis_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim() || a.pivots_ != b.pivots_) return false;
    for (Index i = 0; i < a.basis_.rows(); ++i)
      for (Index j = 0; j < a.basis_.cols(); ++j)
        if (!(a.basis_(i, j) == b.basis_(i, j))) return false;
    return true;
  }

 private:
  Index ambient_ = 0;
  Matrix<F> basis_;
  std::vector<Index> pivots_;
};

/// Right null space {x : m x = 0}.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto r = rref<F>(m);
  const Index n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (Index c : r.pivot_cols) is_pivot[c] = 1;
  std::vector<Vector<F>> basis;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v = zero_vector<F>(n);
    v[free] = F(1);
    for (Index i = 0; i < r.rank; ++i)
      if (!is_zero(r.reduced(i, free))) v[r.pivot_cols[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace<F>::span(basis, n);
}

/// Linear functionals (as rows) whose common zero set is `s`.
template <ExactField F>
Matrix<F> annihilator(const Subspace<F>& s) {
  if (s.dim() == 0) return identity_matrix<F>(s.ambient_dim());
  return kernel<F>(s.basis()).basis();
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace sum");
  return Subspace<F>::span(vstack<F>(a.basis(), b.basis()));
}

/// a ∩ b as the kernel of the stacked annihilators.
template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("intersect: ambient " + std::to_string(a.ambient_dim()) + " vs " +
                          std::to_string(b.ambient_dim()));
  Matrix<F> ann_a = annihilator(a);
  Matrix<F> ann_b = annihilator(b);
  Matrix<F> stacked = vstack<F>(ann_a, ann_b);
  if (stacked.rows() == 0) return a;
  return kernel<F>(stacked);
}

template <ExactField F>
struct Solution {
  Vector<F> particular;
  Subspace<F> homogeneous;
};

/// Solves m x = rhs. Returns nullopt when rhs is outside the column space.
template <ExactField F>
std::optional<Solution<F>> solve(const Matrix<F>& m, const Vector<F>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve: rhs length differs from row count");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  auto r = rref<F>(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector<F> x = zero_vector<F>(m.cols());
  for (Index i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, m.cols());
  return Solution<F>{std::move(x), kernel<F>(m)};
}

/// Coordinates of v in the stored basis of s, or nullopt if v is not in s.
template <ExactField F>
std::optional<Vector<F>> membership(const Vector<F>& v, const Subspace<F>& s) {
  if (v.size() != s.ambient_dim()) throw AmbientMismatch("membership: vector length differs from ambient dimension");
  Vector<F> coords = zero_vector<F>(s.dim());
  Vector<F> rest = v;
  for (Index i = 0; i < s.dim(); ++i) {
    const F c = rest[s.pivots()[i]];
    coords[i] = c;
    if (is_zero(c)) continue;
    for (Index j = 0; j < rest.size(); ++j)
      if (!is_zero(s.basis()(i, j))) rest[j] -= c * s.basis()(i, j);
  }
  for (Index j = 0; j < rest.size(); ++j)
    if (!is_zero(rest[j])) return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------------------
// Sparse incremental elimination.

template <typename F>
struct SparseEntry {
  Index col;
  F val;
};

template <typename F>
using SparseRow = std::vector<SparseEntry<F>>;

template <typename F>
SparseRow<F> to_sparse(const Vector<F>& v, Index offset = 0) {
  SparseRow<F> row;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) row.push_back({i + offset, v[i]});
  return row;
}

/// Row-echelon basis grown one row at a time. Column order is the pivot
/// priority: lower column index wins. Stored rows have leading coefficient 1.
/// Not thread-safe: insertion reuses an internal scratch accumulator.
template <ExactField F>
class SparseEchelon {
 public:
  explicit SparseEchelon(Index ncols)
      : ncols_(ncols), pivot_row_(ncols, -1), acc_(ncols, F(0)), touched_(ncols, 0) {}

  Index cols() const { return ncols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<SparseRow<F>>& rows() const { return rows_; }
  Index pivot_of_row(Index r) const { return rows_[r].front().col; }
  bool is_pivot(Index col) const { return pivot_row_[col] >= 0; }

  /// Reduces `row` and stores the remainder when nonzero.
  /// Returns the new pivot column, or -1 if the row was dependent.
  Index insert(const SparseRow<F>& row) {
    SparseRow<F> rem = reduce(row);
    if (rem.empty()) return -1;
    F inv = F(1) / rem.front().val;
    for (auto& e : rem) e.val = e.val * inv;
    const Index pivot = rem.front().col;
    pivot_row_[pivot] = static_cast<Index>(rows_.size());
    rows_.push_back(std::move(rem));
    return pivot;
  }

  Index insert(const Vector<F>& v) { return insert(to_sparse(v)); }

  /// Remainder of `row` after eliminating every stored pivot from its head.
  SparseRow<F> reduce(const SparseRow<F>& row) {
    std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
    std::vector<Index> touched_list;
    auto touch = [&](Index c) {
      if (!touched_[c]) {
        touched_[c] = 1;
        touched_list.push_back(c);
        heap.push(c);
      }
    };
    for (const auto& e : row) {
      if (e.col < 0 || e.col >= ncols_) throw DimensionMismatch("sparse row column out of range");
      acc_[e.col] += e.val;
      touch(e.col);
    }
    while (!heap.empty()) {
      Index c = heap.top();
      heap.pop();
      if (is_zero(acc_[c])) continue;
      Index pr = pivot_row_[c];
      if (pr < 0) break;
      F f = acc_[c];
      for (const auto& e : rows_[pr]) {
        acc_[e.col] -= f * e.val;
        touch(e.col);
      }
    }
    std::sort(touched_list.begin(), touched_list.end());
    SparseRow<F> out;
    for (Index c : touched_list) {
      if (!is_zero(acc_[c])) out.push_back({c, std::move(acc_[c])});
      acc_[c] = F(0);
      touched_[c] = 0;
    }
    return out;
  }

  /// Fully back-substituted basis, sorted by pivot: every pivot column is a
  /// unit column.
  std::vector<SparseRow<F>> reduced_rows() const {
    std::vector<Index> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return rows_[a].front().col < rows_[b].front().col; });
    std::vector<SparseRow<F>> reduced(rows_.size());
    std::vector<F> acc(ncols_, F(0));
    std::vector<char> touched(ncols_, 0);
    // Reduced rows with a larger pivot are zero on every other pivot column,
    // so subtracting them never reintroduces a pivot: one pass per row.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const SparseRow<F>& r = rows_[*it];
      std::vector<Index> cols;
      for (const auto& e : r) {
        acc[e.col] = e.val;
        touched[e.col] = 1;
        cols.push_back(e.col);
      }
      for (std::size_t k = 1; k < r.size(); ++k) {
        const Index pr = pivot_row_[r[k].col];
        if (pr < 0) continue;
        const F f = r[k].val;
        for (const auto& e : reduced[pr]) {
          acc[e.col] -= f * e.val;
          if (!touched[e.col]) {
            touched[e.col] = 1;
            cols.push_back(e.col);
          }
        }
      }
      std::sort(cols.begin(), cols.end());
      SparseRow<F> out;
      for (Index c : cols) {
        if (!is_zero(acc[c])) out.push_back({c, std::move(acc[c])});
        acc[c] = F(0);
        touched[c] = 0;
      }
      reduced[*it] = std::move(out);
    }
    std::vector<SparseRow<F>> sorted;
    sorted.reserve(order.size());
    for (Index i : order) sorted.push_back(std::move(reduced[i]));
    return sorted;
  }

  /// Dense RREF of the stored rows (rank x cols), pivots ascending.
  Matrix<F> rref_matrix() const {
    auto rows = reduced_rows();
    Matrix<F> m = zero_matrix<F>(static_cast<Index>(rows.size()), ncols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& e : rows[i]) m(static_cast<Index>(i), e.col) = e.val;
    return m;
  }

  /// Null space of the stored rows, in canonical form.
  Subspace<F> kernel() const {
    auto rows = reduced_rows();
    std::vector<char> is_pivot(ncols_, 0);
    for (const auto& r : rows) is_pivot[r.front().col] = 1;
    // column -> list of (row pivot, coefficient)
    std::vector<std::vector<std::pair<Index, F>>> by_col(ncols_);
    for (const auto& r : rows)
      for (std::size_t k = 1; k < r.size(); ++k) by_col[r[k].col].push_back({r.front().col, r[k].val});
    std::vector<Vector<F>> basis;
    for (Index free = 0; free < ncols_; ++free) {
      if (is_pivot[free]) continue;
      Vector<F> v = zero_vector<F>(ncols_);
      v[free] = F(1);
      for (const auto& [p, c] : by_col[free]) v[p] = -c;
      basis.push_back(std::move(v));
    }
    return Subspace<F>::span(basis, ncols_);
  }

 private:
  Index ncols_;
  std::vector<SparseRow<F>> rows_;
  std::vector<Index> pivot_row_;
  std::vector<F> acc_;
  std::vector<char> touched_;
};

}  // namespace pbw
