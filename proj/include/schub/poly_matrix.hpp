#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "schub/polynomial.hpp"

namespace schub {

/// Row-major grid of polynomials.
class PolyMatrix {
public:
  PolyMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("poly matrix: negative shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Polynomial& at(int r, int c) const { return entries_[idx(r, c)]; }
  Polynomial& at(int r, int c) { return entries_[idx(r, c)]; }

private:
  size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("poly matrix: index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }

  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

namespace detail {

// Laplace expansion along the last remaining row, memoized on the set of
// remaining columns. Rows are consumed top to bottom, so the row index is
// determined by how many columns remain.
inline const Polynomial& det_masked(const PolyMatrix& M, const std::vector<int>& rows,
                                    const std::vector<int>& cols, std::uint32_t col_mask,
                                    std::unordered_map<std::uint32_t, Polynomial>& memo,
                                    const TermOrder& ord) {
  auto it = memo.find(col_mask);
  if (it != memo.end()) return it->second;

  const int remaining = __builtin_popcount(col_mask);
  Polynomial det;
  if (remaining == 0) {
    det = Polynomial::constant(1);
  } else {
    const int row = rows[static_cast<size_t>(remaining) - 1];
    int pos = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
      if (!(col_mask & (1u << c))) continue;
      ++pos;
      const Polynomial& entry = M.at(row, cols[c]);
      if (!entry.is_zero()) {
        const Polynomial& sub =
            det_masked(M, rows, cols, col_mask & ~(1u << c), memo, ord);
        if (!sub.is_zero()) {
          Polynomial contrib = mul(entry, sub, ord);
          int term_sign = ((remaining + pos) % 2 == 0) ? 1 : -1;
          det = add(det, term_sign > 0 ? contrib : negate(contrib), ord);
        }
      }
    }
  }
  return memo.emplace(col_mask, std::move(det)).first->second;
}

}  // namespace detail

/// Determinant of the square submatrix given by 0-based row/column index lists.
inline Polynomial determinant(const PolyMatrix& M, const std::vector<int>& rows,
                              const std::vector<int>& cols, const TermOrder& ord) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("determinant: non-square selection");
  if (cols.size() > 31) throw std::invalid_argument("determinant: selection too large");
  std::unordered_map<std::uint32_t, Polynomial> memo;
  const std::uint32_t full = (cols.empty()) ? 0u : ((1u << cols.size()) - 1u);
  return detail::det_masked(M, rows, cols, full, memo, ord);
}

inline Polynomial determinant(const PolyMatrix& M, const TermOrder& ord) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: non-square matrix");
  std::vector<int> idx(static_cast<size_t>(M.rows()));
  for (int i = 0; i < M.rows(); ++i) idx[static_cast<size_t>(i)] = i;
  return determinant(M, idx, idx, ord);
}

}  // namespace schub
