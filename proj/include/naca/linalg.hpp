#pragma once

// Small dense linear algebra over the base-field element types, used for
// nucleus/center computations (kernel of the associator constraints) and
// exhaustive nonsingularity tests.

#include <vector>

#include "naca/extension.hpp"

namespace naca {

namespace detail {

// Pivot preference: over a local field choose the entry of least valuation so
// divisions do not lose precision; over a finite field any nonzero entry works.
inline bool better_pivot(const FqElem& cand, const FqElem& cur) {
  (void)cand;
  (void)cur;
  return false;
}
inline bool better_pivot(const LocalElem& cand, const LocalElem& cur) {
  return cand.valuation() < cur.valuation();
}

}  // namespace detail

// Basis of the solution space of the homogeneous system rows * x = 0.
// Entries indistinguishable from zero at working precision are treated as zero.
template <class B>
std::vector<std::vector<B>> kernel_basis(std::vector<std::vector<B>> rows,
                                         const typename FieldOps<B>::SpecPtr& spec, int ncols) {
  const B zero = FieldOps<B>::zero(spec);
  const B one = FieldOps<B>::one(spec);
  std::vector<int> pivot_col;  // per eliminated row
  size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    // find the best pivot in this column at or below `rank`
    size_t best = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      if (FieldOps<B>::is_zero(rows[r][col])) continue;
      if (best == rows.size() || detail::better_pivot(rows[r][col], rows[best][col])) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    B inv = one / rows[rank][col];
    for (int c = col; c < ncols; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || FieldOps<B>::is_zero(rows[r][col])) continue;
      B f = rows[r][col];
      for (int c = col; c < ncols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // free columns parametrize the kernel
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<B>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<B> v(ncols, zero);
    v[free] = one;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Nonsingularity of a square matrix over F_q by elimination (destructive).
inline bool fq_matrix_nonsingular(std::vector<std::vector<FqElem>> m, const FqSpecPtr& spec) {
  int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(m[col], m[piv]);
    FqElem inv = m[col][col].inv();
    for (int c = col; c < n; ++c) m[col][c] = m[col][c] * inv;
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      FqElem f = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return true;
}

}  // namespace naca
